#include "jokerlab/formats.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jokerlab {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(std::string(what) + " is not valid JSON");
    return doc;
}

std::string monomial_text(const std::vector<unsigned>& alpha) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t r = 0; r < alpha.size(); ++r) {
        if (alpha[r] == 0) continue;
        if (!first) out << '*';
        first = false;
        out << 'a' << r;
        if (alpha[r] > 1) out << '^' << alpha[r];
    }
    return first ? "1" : out.str();
}

std::vector<unsigned> parse_monomial(const std::string& text) {
    if (text == "1") return {};
    std::vector<unsigned> alpha;
    std::istringstream in(text);
    std::string factor;
    while (std::getline(in, factor, '*')) {
        if (factor.size() < 2 || factor[0] != 'a')
            throw Error("cannot parse alpha monomial '" + text + "'");
        std::size_t caret = factor.find('^');
        std::size_t index = 0, exponent = 1, used = 0;
        try {
            index = std::stoul(factor.substr(1, caret - 1), &used);
        } catch (const std::exception&) {
            throw Error("cannot parse alpha monomial '" + text + "'");
        }
        if (used + 1 != (caret == std::string::npos ? factor.size() : caret))
            throw Error("cannot parse alpha monomial '" + text + "'");
        if (caret != std::string::npos) {
            try {
                exponent = std::stoul(factor.substr(caret + 1), &used);
            } catch (const std::exception&) {
                throw Error("cannot parse alpha monomial '" + text + "'");
            }
            if (caret + 1 + used != factor.size() || exponent == 0)
                throw Error("cannot parse alpha monomial '" + text + "'");
        }
        if (index >= 16 || exponent >= 64) throw Error("alpha monomial out of range");
        if (alpha.size() <= index) alpha.resize(index + 1, 0);
        if (alpha[index] != 0) throw Error("alpha monomial repeats a factor");
        alpha[index] = static_cast<unsigned>(exponent);
    }
    return alpha;
}

const std::string& require_string(const json& doc, const char* key, const char* what) {
    if (!doc.contains(key) || !doc[key].is_string())
        throw Error(std::string(what) + " needs a string field '" + key + "'");
    return doc[key].get_ref<const std::string&>();
}

}  // namespace

const char* const artifact_version = "0.1.0";

FiniteField named_field(const std::string& name) {
    if (name == "f2") return FiniteField::f2();
    if (name == "f4") return FiniteField::f4();
    std::string valid;
    for (const std::string& n : named_field_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw Error("unknown field '" + name + "' (valid: " + valid + ")");
}

std::vector<std::string> named_field_names() { return {"f2", "f4"}; }

std::string field_name(const FiniteField& field) {
    return "f" + std::to_string(field.size());
}

FiniteGroup named_group(const std::string& name) {
    if (name == "q8") return make_q8();
    if (name == "c3") return make_c3();
    if (name == "klein4") return make_klein4();
    if (name == "g24") return make_g24().group;
    std::string valid;
    for (const std::string& n : named_group_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw Error("unknown group '" + name + "' (valid: " + valid + ")");
}

std::vector<std::string> named_group_names() { return {"c3", "g24", "klein4", "q8"}; }

std::string group_to_json(const FiniteGroup& group) {
    json doc;
    doc["order"] = group.order();
    json names = json::array();
    for (std::size_t g = 0; g < group.order(); ++g) names.push_back(group.name_of(g));
    doc["names"] = std::move(names);
    json table = json::array();
    for (std::size_t g = 0; g < group.order(); ++g) {
        json row = json::array();
        for (std::size_t h = 0; h < group.order(); ++h) row.push_back(group.mul(g, h));
        table.push_back(std::move(row));
    }
    doc["table"] = std::move(table);
    return doc.dump(2) + "\n";
}

std::string module_to_json(const GModule& m) {
    json doc;
    doc["field"] = field_name(m.field());
    doc["group"] = m.group().label();
    json generators = json::object();
    for (const auto& [name, index] : m.group().generators())
        generators[name] = m.rho(index).to_text();
    doc["generators"] = std::move(generators);
    return doc.dump(2) + "\n";
}

GModule module_from_json(const std::string& text) {
    json doc = parse_json(text, "module document");
    FiniteField field = named_field(require_string(doc, "field", "module document"));
    FiniteGroup group = named_group(require_string(doc, "group", "module document"));
    if (!doc.contains("generators") || !doc["generators"].is_object())
        throw Error("module document needs an object field 'generators'");
    std::vector<std::pair<std::string, Matrix>> generators;
    for (const auto& [name, value] : doc["generators"].items()) {
        if (!value.is_string()) throw Error("generator '" + name + "' must be matrix text");
        generators.emplace_back(name,
                                Matrix::parse_text(field, value.get_ref<const std::string&>()));
    }
    return module_from_action(field, group, generators);
}

GModule load_module_file(const std::string& path) {
    return module_from_json(read_text_file(path));
}

std::string resolution_to_json(const FreeResolution& res) {
    json doc;
    doc["artifact"] = artifact_version;
    doc["field"] = field_name(res.field);
    doc["group"] = res.group.label();
    doc["ranks"] = res.ranks;
    json diffs = json::array();
    for (const Matrix& d : res.differentials) diffs.push_back(d.to_text());
    doc["differentials"] = std::move(diffs);
    return doc.dump(2) + "\n";
}

FreeResolution resolution_from_json(const std::string& text) {
    json doc = parse_json(text, "resolution document");
    if (require_string(doc, "artifact", "resolution document") != artifact_version)
        throw Error("resolution document was written by a different artifact version");
    FiniteField field = named_field(require_string(doc, "field", "resolution document"));
    FiniteGroup group = named_group(require_string(doc, "group", "resolution document"));
    if (!doc.contains("ranks") || !doc["ranks"].is_array())
        throw Error("resolution document needs an array field 'ranks'");
    if (!doc.contains("differentials") || !doc["differentials"].is_array())
        throw Error("resolution document needs an array field 'differentials'");
    FreeResolution res{field, group, {}, {}};
    for (const json& r : doc["ranks"]) {
        if (!r.is_number_unsigned()) throw Error("resolution ranks must be nonnegative");
        res.ranks.push_back(r.get<std::size_t>());
    }
    for (const json& d : doc["differentials"]) {
        if (!d.is_string()) throw Error("resolution differentials must be matrix text");
        res.differentials.push_back(Matrix::parse_text(field, d.get_ref<const std::string&>()));
    }
    verify_resolution(res);
    return res;
}

std::string resolution_cache_path(const std::string& dir, const FiniteGroup& group,
                                  const FiniteField& field, std::size_t length) {
    std::filesystem::path p(dir);
    p /= group.label() + "-" + field_name(field) + "-len" + std::to_string(length) + "-v" +
         artifact_version + ".json";
    return p.string();
}

CachedResolution cached_minimal_resolution(const std::string& dir, const FiniteField& field,
                                           const FiniteGroup& group, std::size_t length) {
    std::string path = resolution_cache_path(dir, group, field, length);
    if (std::filesystem::exists(path)) {
        try {
            FreeResolution res = resolution_from_json(read_text_file(path));
            if (res.group == group && res.field == field && res.length() == length)
                return CachedResolution{std::move(res), true, std::move(path)};
        } catch (const Error&) {
            /* Stale or corrupt entry: fall through and recompute. */
        }
    }
    FreeResolution res = minimal_resolution(field, group, length);
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    write_text_file(path, resolution_to_json(res));
    return CachedResolution{std::move(res), false, std::move(path)};
}

std::string coaction_spec_to_json(const CoactionSpec& spec) {
    json doc = json::array();
    for (const CoactionEntry& entry : spec.entries) {
        json e;
        e["source"] = entry.source;
        e["degree"] = entry.degree;
        json terms = json::array();
        for (const CoactionTerm& term : entry.terms) {
            json t;
            t["coeff"] = term.coeff;
            t["monomial"] = monomial_text(term.alpha);
            t["u_power"] = term.u_power;
            t["target"] = spec.entries.at(term.target).source;
            terms.push_back(std::move(t));
        }
        e["terms"] = std::move(terms);
        doc.push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

CoactionSpec coaction_spec_from_json(const std::string& text, const std::string& name) {
    json doc = parse_json(text, "coaction document");
    if (!doc.is_array()) throw Error("coaction document must be a JSON list");
    CoactionSpec spec;
    spec.name = name;
    std::vector<std::string> sources;
    for (const json& e : doc) {
        CoactionEntry entry;
        entry.source = require_string(e, "source", "coaction entry");
        if (!e.contains("degree") || !e["degree"].is_number_integer())
            throw Error("coaction entry needs an integer field 'degree'");
        entry.degree = e["degree"].get<long>();
        if (!e.contains("terms") || !e["terms"].is_array())
            throw Error("coaction entry needs an array field 'terms'");
        for (const json& t : e["terms"]) {
            CoactionTerm term;
            term.coeff = require_string(t, "coeff", "coaction term");
            term.alpha = parse_monomial(require_string(t, "monomial", "coaction term"));
            if (!t.contains("u_power") || !t["u_power"].is_number_integer())
                throw Error("coaction term needs an integer field 'u_power'");
            term.u_power = t["u_power"].get<long>();
            const std::string& target = require_string(t, "target", "coaction term");
            std::size_t index = 0;
            while (index < sources.size() && sources[index] != target) ++index;
            if (index == sources.size() && target != entry.source)
                throw Error("coaction term targets unknown source '" + target + "'");
            term.target = index;  // equal to own index for the diagonal term
            entry.terms.push_back(std::move(term));
        }
        sources.push_back(entry.source);
        spec.entries.push_back(std::move(entry));
    }
    validate_coaction_spec(spec);
    return spec;
}

CoactionSpec load_coaction_spec(const std::string& path) {
    return coaction_spec_from_json(read_text_file(path),
                                   std::filesystem::path(path).stem().string());
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("cannot write '" + path + "'");
}

}  // namespace jokerlab
