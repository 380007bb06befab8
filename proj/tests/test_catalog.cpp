#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "kodim/catalog.hpp"
#include "kodim/catalog_io.hpp"

using namespace kodim;

TEST_CASE("name normalization") {
    CHECK(normalize_name("H2xR") == "h2xr");
    CHECK(normalize_name(" Sol4_m,n ") == "sol4_m,n");
    CHECK(normalize_name("SU(3)/SO(3)") == "su(3)/so(3)");
    CHECK(normalize_name("H 2 x R") == "h2xr");
    CHECK(normalize_name("\tSL2t") == "sl2t");
}

TEST_CASE("built-in catalog has the expected census") {
    Catalog cat = load_builtin();
    CHECK(cat.size() == 90);
    CHECK(cat.max_dimension() == 5);

    const std::vector<std::pair<int, std::size_t>> counts = {
        {0, 1}, {1, 1}, {2, 3}, {3, 8}, {4, 19}, {5, 58}};
    for (auto [dim, expected] : counts) {
        CHECK_MESSAGE(cat.in_dimension(dim).size() == expected, "dim ", dim);
    }

    // Compact representability: all but F4 in dim 4, all but four in dim 5.
    auto compact_count = [&cat](int dim) {
        auto records = cat.in_dimension(dim);
        return std::count_if(records.begin(), records.end(),
                             [](const Geometry* g) { return g->has_compact_representative; });
    };
    CHECK(compact_count(4) == 18);
    CHECK(compact_count(5) == 54);
    CHECK_FALSE(cat.lookup("F4").has_compact_representative);
    CHECK_FALSE(cat.lookup("F4xR").has_compact_representative);
    CHECK_FALSE(cat.lookup("T1(R1,2)").has_compact_representative);
    CHECK_FALSE(cat.lookup("F5_0").has_compact_representative);
    CHECK_FALSE(cat.lookup("F5_1").has_compact_representative);
}

TEST_CASE("lookup is case- and space-insensitive and resolves aliases") {
    Catalog cat = load_builtin();
    CHECK(cat.lookup("h3").name == "H3");
    CHECK(cat.lookup("H3 x R").name == "H3xR");
    CHECK(cat.lookup("sl2~").name == "SL2t");
    CHECK(cat.lookup("SL2R").name == "SL2t");
    CHECK(cat.lookup("Sol3xR").name == "Sol4_m,n");
    CHECK(cat.lookup("Sol3xR2").name == "Sol4_m,nxR");
    CHECK(cat.lookup("CH2").name == "H2(C)");
    CHECK(cat.lookup("Wu").name == "SU(3)/SO(3)");
    CHECK(cat.lookup("H2xH3").name == "H3xH2");
    CHECK(cat.lookup("T1H3").name == "T1(H3)");
    CHECK(cat.lookup("E4").name == "R4");
    CHECK(cat.lookup("pt").name == "point");
    CHECK(cat.find("no-such-geometry") == nullptr);
}

TEST_CASE("failed lookup carries close-match suggestions") {
    Catalog cat = load_builtin();
    try {
        cat.lookup("Nli3");
        FAIL("expected NotFoundError");
    } catch (const NotFoundError& e) {
        CHECK(e.name() == "Nli3");
        REQUIRE_FALSE(e.suggestions().empty());
        CHECK(e.suggestions().front() == "Nil3");
        CHECK(e.suggestions().size() <= 3);
    }
}

TEST_CASE("decomposition product detection looks at the first word") {
    Decomposition product{"H3", "R", "product"};
    CHECK(product.is_product());
    Decomposition padded{"H3", "R", "  product of factors"};
    CHECK(padded.is_product());
    Decomposition twisted{"S3", "R2", "twisted product with spherical fiber"};
    CHECK_FALSE(twisted.is_product());
    Decomposition empty{"S3", "R2", ""};
    CHECK_FALSE(empty.is_product());
}

TEST_CASE("built-in decompositions are structurally sound") {
    Catalog cat = load_builtin();
    for (const Geometry& g : cat.records()) {
        CHECK((g.cls == GeometryClass::Fibered) == !g.decompositions.empty());
        for (const Decomposition& d : g.decompositions) {
            const Geometry& fiber = cat.lookup(d.fiber);
            const Geometry& base = cat.lookup(d.base);
            CHECK(fiber.dim + base.dim == g.dim);
            CHECK(fiber.dim < g.dim);
            CHECK(base.dim < g.dim);
        }
    }
}

TEST_CASE("parse errors carry line numbers and messages") {
    auto result = parse_catalog("name: X\ndim: two\nclass: euclidean\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].line == 2);
    CHECK(result.diagnostics[0].message.find("dim") != std::string::npos);

    result = parse_catalog("name: X\ndim: 2\nclass: banana\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].message.find("unknown class tag 'banana'") != std::string::npos);

    result = parse_catalog("name: X\ndim: 2\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].message.find("class") != std::string::npos);

    result = parse_catalog("just some words\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].message.find("syntax error") != std::string::npos);
}

TEST_CASE("validation rejects structural problems") {
    // Duplicate alias.
    auto result = parse_catalog(
        "name: A\ndim: 2\nclass: euclidean\nalias: B\n\nname: B\ndim: 2\nclass: euclidean\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].message.find("duplicate name or alias") != std::string::npos);

    // Dangling decomposition reference.
    result = parse_catalog("name: A\ndim: 3\nclass: fibered\nfib: X | Y\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].message.find("dangling decomposition reference") !=
          std::string::npos);

    // Dimensions must sum.
    result = parse_catalog(
        "name: A\ndim: 2\nclass: euclidean\n\nname: B\ndim: 3\nclass: euclidean\n\n"
        "name: C\ndim: 4\nclass: fibered\nfib: A | B\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].message.find("dimension mismatch") != std::string::npos);

    // Fibered needs decompositions; non-fibered must not have them.
    result = parse_catalog("name: A\ndim: 3\nclass: fibered\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].message.find("no decompositions") != std::string::npos);

    result = parse_catalog(
        "name: A\ndim: 1\nclass: euclidean\n\nname: B\ndim: 2\nclass: euclidean\nfib: A | A\n");
    REQUIRE_FALSE(result.ok());

    // Decompositions must strictly reduce dimension, so a fiber can never
    // be the 0-dimensional point geometry.
    result = parse_catalog(
        "name: P\ndim: 0\nclass: point\n\nname: B\ndim: 2\nclass: fibered\nfib: P | B\n");
    REQUIRE_FALSE(result.ok());

    // Dimension range.
    result = parse_catalog("name: A\ndim: 8\nclass: euclidean\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].message.find("out of range") != std::string::npos);
}

TEST_CASE("serialize/parse round-trips the built-in catalog") {
    Catalog cat = load_builtin();
    std::string text = serialize_catalog(cat);
    auto result = parse_catalog(text);
    REQUIRE(result.ok());
    CHECK(*result.catalog == cat);
    // And the round-trip is a fixed point.
    CHECK(serialize_catalog(*result.catalog) == text);
}

TEST_CASE("extension catalogs may reference built-in geometries") {
    Catalog cat = load_builtin();
    auto result = extend_catalog(cat, "name: H3xH3\ndim: 6\nclass: fibered\nfib: H3 | H3 # product\n");
    REQUIRE(result.ok());
    CHECK(result.catalog->size() == 91);
    CHECK(result.catalog->max_dimension() == 6);
    CHECK(result.catalog->lookup("H3xH3").decompositions.size() == 1);

    // Extensions must not redefine existing names.
    auto clash = extend_catalog(cat, "name: H3\ndim: 3\nclass: compact\n");
    CHECK_FALSE(clash.ok());
}

TEST_CASE("comments and layout are ignored by the parser") {
    auto result = parse_catalog(
        "# header comment\n\n"
        "name: A   # trailing comment\n"
        "dim: 2\n"
        "class: euclidean\n"
        "\n\n\n"
        "# another\n"
        "name: B\n"
        "dim: 4\n"
        "class: fibered\n"
        "fib: A | A # note text here\n"
        "compact_rep: false\n");
    REQUIRE(result.ok());
    CHECK(result.catalog->lookup("A").name == "A");
    const Geometry& b = result.catalog->lookup("B");
    CHECK(b.decompositions[0].note == "note text here");
    CHECK_FALSE(b.has_compact_representative);
}

namespace {

// Deterministic random record lists for the round-trip property test.
std::vector<Geometry> random_records(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 12);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> cls_pick(0, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    const GeometryClass classes[] = {GeometryClass::Compact, GeometryClass::Euclidean,
                                     GeometryClass::Nilpotent, GeometryClass::Solvable,
                                     GeometryClass::IrrSymmetricNoncompact};
    int n = count(rng);
    std::vector<Geometry> records;
    for (int i = 0; i < n; ++i) {
        Geometry g;
        g.name = "G" + std::to_string(i);
        g.dim = dim(rng);
        g.cls = classes[cls_pick(rng)];
        g.has_compact_representative = coin(rng) == 0;
        if (coin(rng)) g.aliases.push_back("alias" + std::to_string(i));
        if (coin(rng)) g.note = "note " + std::to_string(i);
        records.push_back(std::move(g));
    }
    // Give some records a fibered structure over earlier ones when the
    // dimensions allow it.
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (coin(rng)) continue;
        for (std::size_t a = 0; a < i; ++a) {
            for (std::size_t b = 0; b < i; ++b) {
                int total = records[a].dim + records[b].dim;
                if (total > records[i].dim && total <= 7 &&
                    records[a].dim < total && records[b].dim < total) {
                    records[i].dim = total;
                    records[i].cls = GeometryClass::Fibered;
                    records[i].decompositions = {
                        {records[a].name, records[b].name, coin(rng) ? "product" : ""}};
                    a = b = i;  // break both loops
                }
            }
        }
    }
    return records;
}

}  // namespace

TEST_CASE("serialize/parse round-trips random catalogs") {
    std::mt19937 rng(424242);
    int built = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Geometry> records = random_records(rng);
        if (!validate(records).ok()) continue;  // generator aims for valid, skip rest
        ++built;
        Catalog cat = Catalog::from_records(records);
        auto result = parse_catalog(serialize_catalog(cat));
        REQUIRE(result.ok());
        CHECK(*result.catalog == cat);
    }
    CHECK(built > 100);  // the generator really does exercise the property
}
