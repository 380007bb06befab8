// kodim — command-line front end for the geometry classification library.
//
// Exit codes: 0 success, 2 unknown name or malformed input, 3 catalog
// validation failure, 4 inconsistent volume rules.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kodim/bundle4.hpp"
#include "kodim/catalog_io.hpp"
#include "kodim/domination.hpp"
#include "kodim/kappa_engine.hpp"
#include "kodim/volume_rules.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitInvalidCatalog = 3;
constexpr int kExitInconsistentRules = 4;

struct Options {
    std::string format = "text";
    std::string catalog_path;               // replaces the built-in table
    std::vector<std::string> extend_paths;  // merged on top

    bool json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kodim::InputError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Builds the working catalog from --catalog / --extend, printing
// diagnostics and exiting with status 3 when any layer fails to validate.
kodim::Catalog assemble_catalog(const Options& opt) {
    kodim::CatalogParseResult result;
    if (opt.catalog_path.empty()) {
        result.catalog = kodim::load_builtin();
    } else {
        result = kodim::parse_catalog(read_file(opt.catalog_path));
    }
    for (const std::string& path : opt.extend_paths) {
        if (!result.ok()) break;
        result = kodim::extend_catalog(*result.catalog, read_file(path));
    }
    if (!result.ok()) {
        for (const auto& d : result.diagnostics) {
            std::cerr << "error: " << kodim::format_diagnostic(d) << "\n";
        }
        std::exit(kExitInvalidCatalog);
    }
    return std::move(*result.catalog);
}

ordered_json levels_json(const std::vector<kodim::PreorderLevel>& levels) {
    ordered_json arr = ordered_json::array();
    for (const auto& level : levels) {
        ordered_json entry;
        entry["kappa"] = level.kappa.str();
        entry["geometries"] = level.geometries;
        arr.push_back(std::move(entry));
    }
    return arr;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_kappa(const Options& opt, const std::string& name) {
    kodim::Catalog catalog = assemble_catalog(opt);
    kodim::KappaEngine engine(catalog);
    kodim::KappaResult r = engine.kappa(name);
    if (opt.json()) {
        ordered_json doc;
        doc["geometry"] = catalog.lookup(name).name;
        doc["kappa"] = r.value.str();
        doc["axiom"] = std::string(kodim::axiom_label(r.axiom));
        if (r.witness) {
            doc["witness"] = {{"fiber", r.witness->fiber}, {"base", r.witness->base}};
        }
        emit(doc);
    } else {
        std::cout << r.value.str() << " (" << kodim::axiom_label(r.axiom) << ")";
        if (r.witness) std::cout << " via " << r.witness->fiber << " | " << r.witness->base;
        std::cout << "\n";
    }
    return kExitOk;
}

int run_table(const Options& opt, int dim) {
    kodim::Catalog catalog = assemble_catalog(opt);
    kodim::KappaEngine engine(catalog);
    auto table = engine.classify_table(dim);
    if (opt.json()) {
        ordered_json doc;
        doc["dim"] = dim;
        ordered_json arr = ordered_json::array();
        for (const auto& [kappa, names] : table) {
            ordered_json entry;
            entry["kappa"] = kappa.str();
            entry["geometries"] = names;
            arr.push_back(std::move(entry));
        }
        doc["levels"] = std::move(arr);
        emit(doc);
    } else {
        for (const auto& [kappa, names] : table) {
            std::cout << "kappa " << kappa.str() << ":";
            for (std::size_t i = 0; i < names.size(); ++i) {
                std::cout << (i ? ", " : " ") << names[i];
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_volume(const Options& opt, const std::string& name) {
    kodim::Catalog catalog = assemble_catalog(opt);
    kodim::VolumeClassifier volume(catalog);
    kodim::VolumeVerdict v = volume.status(name);
    if (opt.json()) {
        ordered_json doc;
        doc["geometry"] = catalog.lookup(name).name;
        doc["status"] = std::string(kodim::volume_status_label(v.status));
        ordered_json trace = ordered_json::array();
        for (const auto& m : v.trace) {
            trace.push_back({{"rule", m.rule}, {"premise", m.premise}});
        }
        doc["trace"] = std::move(trace);
        emit(doc);
    } else {
        std::cout << kodim::volume_status_label(v.status) << "\n";
        for (const auto& m : v.trace) {
            std::cout << "  " << m.rule << ": " << m.premise << "\n";
        }
    }
    return kExitOk;
}

int run_order(const Options& opt, const std::string& m, const std::string& n) {
    kodim::Catalog catalog = assemble_catalog(opt);
    kodim::DominationOracle oracle(catalog);
    kodim::DominationVerdict v = oracle.check(m, n);
    if (opt.json()) {
        ordered_json doc;
        doc["m"] = catalog.lookup(m).name;
        doc["n"] = catalog.lookup(n).name;
        doc["status"] = std::string(kodim::domination_status_label(v.status));
        ordered_json reasons = ordered_json::array();
        for (const auto& r : v.reasons) {
            reasons.push_back({{"id", r.id}, {"detail", r.detail}});
        }
        doc["reasons"] = std::move(reasons);
        emit(doc);
    } else {
        if (v.status == kodim::DominationStatus::NotForbidden) {
            std::cout << "not forbidden\n";
        } else {
            std::cout << "forbidden (";
            for (std::size_t i = 0; i < v.reasons.size(); ++i) {
                if (i) std::cout << "; ";
                std::cout << v.reasons[i].id << ": " << v.reasons[i].detail;
            }
            std::cout << ")\n";
        }
    }
    return kExitOk;
}

int run_bundle(const Options& opt, const std::string& fiber_text, const std::string& base_text) {
    kodim::BundleFactor fiber = kodim::BundleFactor::parse(fiber_text);
    kodim::BundleFactor base = kodim::BundleFactor::parse(base_text);
    for (const auto* f : {&fiber, &base}) {
        if (kodim::is_degenerate_three_manifold(*f)) {
            std::cerr << "warning: 3-manifold factor " << f->str()
                      << " has an empty piece list; classifying as a graph-like manifold\n";
        }
    }
    kodim::ExtKappa kappa = kodim::bundle_kappa(fiber, base);
    if (opt.json()) {
        ordered_json doc;
        doc["fiber"] = fiber.str();
        doc["base"] = base.str();
        doc["kappa"] = kappa.str();
        doc["volume_positive"] = kodim::bundle_volume_positive(fiber, base);
        emit(doc);
    } else {
        std::cout << kappa.str() << "\n";
    }
    return kExitOk;
}

int run_preorder(const Options& opt, int dim, bool dot, bool json_flag) {
    kodim::Catalog catalog = assemble_catalog(opt);
    kodim::DominationOracle oracle(catalog);
    if (dot) {
        std::cout << oracle.preorder_dot(dim);
    } else if (json_flag || opt.json()) {
        std::cout << oracle.preorder_json(dim);
    } else {
        for (const auto& level : oracle.preorder_levels(dim)) {
            std::cout << "kappa " << level.kappa.str() << ":";
            for (std::size_t i = 0; i < level.geometries.size(); ++i) {
                std::cout << (i ? ", " : " ") << level.geometries[i];
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_catalog_export(const Options& opt) {
    kodim::Catalog catalog = assemble_catalog(opt);
    std::cout << kodim::serialize_catalog(catalog);
    return kExitOk;
}

int run_catalog_validate(const Options& opt, const std::string& path) {
    kodim::CatalogParseResult result = kodim::parse_catalog(read_file(path));
    if (opt.json()) {
        ordered_json doc;
        doc["ok"] = result.ok();
        if (result.ok()) {
            doc["records"] = result.catalog->size();
        } else {
            ordered_json issues = ordered_json::array();
            for (const auto& d : result.diagnostics) {
                issues.push_back({{"line", d.line}, {"record", d.record}, {"message", d.message}});
            }
            doc["issues"] = std::move(issues);
        }
        emit(doc);
    } else if (result.ok()) {
        std::cout << "ok: " << result.catalog->size() << " records\n";
    } else {
        for (const auto& d : result.diagnostics) {
            std::cerr << "error: " << kodim::format_diagnostic(d) << "\n";
        }
    }
    return result.ok() ? kExitOk : kExitInvalidCatalog;
}

int run_catalog_load(const Options& opt, const std::string& path) {
    kodim::Catalog base = assemble_catalog(opt);
    std::size_t before = base.size();
    kodim::CatalogParseResult result = kodim::extend_catalog(base, read_file(path));
    if (opt.json()) {
        ordered_json doc;
        doc["ok"] = result.ok();
        if (result.ok()) {
            doc["records"] = result.catalog->size();
            doc["added"] = result.catalog->size() - before;
            doc["max_dim"] = result.catalog->max_dimension();
        } else {
            ordered_json issues = ordered_json::array();
            for (const auto& d : result.diagnostics) {
                issues.push_back({{"line", d.line}, {"record", d.record}, {"message", d.message}});
            }
            doc["issues"] = std::move(issues);
        }
        emit(doc);
    } else if (result.ok()) {
        std::cout << "ok: " << result.catalog->size() << " records ("
                  << result.catalog->size() - before << " added, max dim "
                  << result.catalog->max_dimension() << ")\n";
    } else {
        for (const auto& d : result.diagnostics) {
            std::cerr << "error: " << kodim::format_diagnostic(d) << "\n";
        }
    }
    return result.ok() ? kExitOk : kExitInvalidCatalog;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Axiomatic Kodaira-dimension classification of model geometries"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--catalog", opt.catalog_path,
                   "Catalog file replacing the built-in table");
    app.add_option("--extend", opt.extend_paths,
                   "Extension catalog merged on top (repeatable)");

    std::string name, m, n, fiber, base, path;
    int dim = 0;
    bool dot = false, json_flag = false;

    CLI::App* c_kappa = app.add_subcommand("kappa", "Classify one geometry");
    c_kappa->add_option("name", name, "Geometry name or alias")->required();

    CLI::App* c_table = app.add_subcommand("table", "Classification table for a dimension");
    c_table->add_option("--dim", dim, "Dimension")->required();

    CLI::App* c_volume = app.add_subcommand("volume", "Simplicial-volume sign of a geometry");
    c_volume->add_option("name", name, "Geometry name or alias")->required();

    CLI::App* c_order = app.add_subcommand("order", "Non-zero-degree map obstruction check");
    c_order->add_option("m", m, "Source geometry")->required();
    c_order->add_option("n", n, "Target geometry")->required();

    CLI::App* c_bundle = app.add_subcommand("bundle", "Kappa of a 4-dimensional fiber bundle");
    c_bundle->add_option("fiber", fiber, "Fiber factor")->required();
    c_bundle->add_option("base", base, "Base factor")->required();

    CLI::App* c_preorder = app.add_subcommand("preorder", "Domination preorder levels");
    c_preorder->add_option("--dim", dim, "Dimension")->required();
    c_preorder->add_flag("--dot", dot, "Emit Graphviz");
    c_preorder->add_flag("--json", json_flag, "Emit JSON");

    CLI::App* c_catalog = app.add_subcommand("catalog", "Catalog maintenance");
    c_catalog->require_subcommand(1);
    CLI::App* c_export = c_catalog->add_subcommand("export", "Serialize the working catalog");
    CLI::App* c_validate = c_catalog->add_subcommand("validate", "Validate a catalog file");
    c_validate->add_option("path", path, "Catalog file")->required();
    CLI::App* c_load = c_catalog->add_subcommand("load", "Merge a catalog file over the working catalog");
    c_load->add_option("path", path, "Catalog file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (c_kappa->parsed()) return run_kappa(opt, name);
        if (c_table->parsed()) return run_table(opt, dim);
        if (c_volume->parsed()) return run_volume(opt, name);
        if (c_order->parsed()) return run_order(opt, m, n);
        if (c_bundle->parsed()) return run_bundle(opt, fiber, base);
        if (c_preorder->parsed()) return run_preorder(opt, dim, dot, json_flag);
        if (c_catalog->parsed()) {
            if (c_export->parsed()) return run_catalog_export(opt);
            if (c_validate->parsed()) return run_catalog_validate(opt, path);
            if (c_load->parsed()) return run_catalog_load(opt, path);
        }
    } catch (const kodim::InconsistentRulesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistentRules;
    } catch (const kodim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;  // unreachable with require_subcommand(1)
}
