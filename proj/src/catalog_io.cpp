#include "kodim/catalog_io.hpp"

#include <cctype>
#include <charconv>

namespace kodim {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Parser {
    std::vector<Geometry> records;
    std::vector<Diagnostic> diagnostics;

    Geometry current;
    bool in_record = false;
    bool saw_name = false, saw_dim = false, saw_class = false, saw_compact = false;
    int record_first_line = 0;

    void error(int line, std::string message) {
        diagnostics.push_back({line, saw_name ? current.name : std::string{}, std::move(message)});
    }

    void flush(int line) {
        if (!in_record) return;
        if (!saw_name) error(record_first_line, "record is missing 'name:'");
        if (!saw_dim) error(record_first_line, "record is missing 'dim:'");
        if (!saw_class) error(record_first_line, "record is missing 'class:'");
        (void)line;
        records.push_back(std::move(current));
        current = Geometry{};
        in_record = false;
        saw_name = saw_dim = saw_class = saw_compact = false;
    }

    void field(int line, std::string_view key, std::string_view value) {
        if (!in_record) {
            in_record = true;
            record_first_line = line;
        }
        if (key == "name") {
            if (saw_name) error(line, "duplicate 'name:' in record");
            current.name = std::string(trim(value));
            saw_name = true;
            if (current.name.empty()) error(line, "empty name");
        } else if (key == "dim") {
            if (saw_dim) error(line, "duplicate 'dim:' in record");
            saw_dim = true;
            std::string_view v = trim(value);
            int dim = 0;
            auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), dim);
            if (ec != std::errc{} || ptr != v.data() + v.size()) {
                error(line, "syntax error: 'dim:' expects an integer, got '" + std::string(v) + "'");
            } else {
                current.dim = dim;
            }
        } else if (key == "class") {
            if (saw_class) error(line, "duplicate 'class:' in record");
            saw_class = true;
            std::string_view tag = trim(value);
            if (auto cls = class_from_tag(tag)) {
                current.cls = *cls;
            } else {
                error(line, "unknown class tag '" + std::string(tag) + "'");
            }
        } else if (key == "fib") {
            // value still carries any '#'-introduced note at this point.
            std::string_view body = value;
            std::string note;
            if (auto hash = body.find('#'); hash != std::string_view::npos) {
                note = std::string(trim(body.substr(hash + 1)));
                body = body.substr(0, hash);
            }
            auto bar = body.find('|');
            if (bar == std::string_view::npos) {
                error(line, "syntax error: 'fib:' expects '<fiber> | <base>'");
                return;
            }
            Decomposition d;
            d.fiber = std::string(trim(body.substr(0, bar)));
            d.base = std::string(trim(body.substr(bar + 1)));
            d.note = std::move(note);
            if (d.fiber.empty() || d.base.empty()) {
                error(line, "syntax error: 'fib:' has an empty fiber or base");
                return;
            }
            current.decompositions.push_back(std::move(d));
        } else if (key == "compact_rep") {
            if (saw_compact) error(line, "duplicate 'compact_rep:' in record");
            saw_compact = true;
            std::string_view v = trim(value);
            if (v == "true") {
                current.has_compact_representative = true;
            } else if (v == "false") {
                current.has_compact_representative = false;
            } else {
                error(line, "syntax error: 'compact_rep:' expects true or false");
            }
        } else if (key == "alias") {
            std::string alias(trim(value));
            if (alias.empty()) {
                error(line, "empty alias");
            } else {
                current.aliases.push_back(std::move(alias));
            }
        } else if (key == "note") {
            if (!current.note.empty()) current.note += " ";
            current.note += std::string(trim(value));
        } else {
            error(line, "unknown key '" + std::string(key) + "'");
        }
    }
};

std::vector<Geometry> parse_records(std::string_view text, std::vector<Diagnostic>& diagnostics) {
    Parser p;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        std::string_view stripped = trim(line);
        if (stripped.empty()) {
            p.flush(line_no);
            continue;
        }
        if (stripped.front() == '#') continue;  // full-line comment

        auto colon = stripped.find(':');
        if (colon == std::string_view::npos) {
            p.error(line_no, "syntax error: expected 'key: value'");
            continue;
        }
        std::string_view key = trim(stripped.substr(0, colon));
        std::string_view value = stripped.substr(colon + 1);
        // Outside fib lines a '#' begins a trailing comment; for fib lines
        // the field handler keeps it as the decomposition note.
        if (key != "fib") {
            if (auto hash = value.find('#'); hash != std::string_view::npos) {
                value = value.substr(0, hash);
            }
        }
        p.field(line_no, key, value);
    }
    p.flush(line_no);
    diagnostics = std::move(p.diagnostics);
    return std::move(p.records);
}

CatalogParseResult finish(std::vector<Geometry> records, std::vector<Diagnostic> diagnostics) {
    ValidationReport report = validate(records);
    diagnostics.insert(diagnostics.end(), report.issues.begin(), report.issues.end());
    CatalogParseResult result;
    if (diagnostics.empty()) {
        result.catalog = Catalog::from_records(std::move(records));
    }
    result.diagnostics = std::move(diagnostics);
    return result;
}

}  // namespace

CatalogParseResult parse_catalog(std::string_view text) {
    std::vector<Diagnostic> diagnostics;
    std::vector<Geometry> records = parse_records(text, diagnostics);
    return finish(std::move(records), std::move(diagnostics));
}

CatalogParseResult extend_catalog(const Catalog& base, std::string_view text) {
    std::vector<Diagnostic> diagnostics;
    std::vector<Geometry> extra = parse_records(text, diagnostics);
    std::vector<Geometry> all = base.records();
    all.insert(all.end(), std::make_move_iterator(extra.begin()),
               std::make_move_iterator(extra.end()));
    return finish(std::move(all), std::move(diagnostics));
}

std::string serialize_catalog(const Catalog& catalog) {
    std::string out;
    bool first = true;
    for (const Geometry& g : catalog.records()) {
        if (!first) out += "\n";
        first = false;
        out += "name: " + g.name + "\n";
        out += "dim: " + std::to_string(g.dim) + "\n";
        out += "class: " + std::string(class_tag(g.cls)) + "\n";
        for (const Decomposition& d : g.decompositions) {
            out += "fib: " + d.fiber + " | " + d.base;
            if (!d.note.empty()) out += " # " + d.note;
            out += "\n";
        }
        for (const std::string& alias : g.aliases) {
            out += "alias: " + alias + "\n";
        }
        if (!g.has_compact_representative) out += "compact_rep: false\n";
        if (!g.note.empty()) out += "note: " + g.note + "\n";
    }
    return out;
}

Catalog load_builtin() {
    CatalogParseResult result = parse_catalog(builtin_catalog_text());
    if (!result.ok()) {
        std::string msg = "built-in catalog failed to parse:";
        for (const Diagnostic& d : result.diagnostics) msg += "\n  " + format_diagnostic(d);
        throw Error(msg);
    }
    return std::move(*result.catalog);
}

}  // namespace kodim
