#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jokerlab/builtins.hpp"
#include "jokerlab/coaction.hpp"
#include "jokerlab/ext.hpp"
#include "jokerlab/formats.hpp"
#include "jokerlab/gmodule.hpp"
#include "jokerlab/group.hpp"
#include "jokerlab/hecke.hpp"
#include "jokerlab/padic.hpp"
#include "jokerlab/resolution.hpp"
#include "jokerlab/stable.hpp"
#include "jokerlab/verify.hpp"

namespace {

namespace jl = jokerlab;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const std::string& p : parts) out += (out.empty() ? "" : sep) + p;
    return out;
}

void print_kv(const std::string& key, const std::string& value) {
    std::string padded = key;
    if (padded.size() < 12) padded.resize(12, ' ');
    std::cout << padded << "  " << value << "\n";
}

/* Indent a multi-line block (matrix text) for table output. */
void print_block(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) std::cout << "  " << line << "\n";
}

std::string default_cache_dir() {
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return (std::filesystem::path(xdg) / "jokerlab").string();
    if (const char* home = std::getenv("HOME"))
        return (std::filesystem::path(home) / ".cache" / "jokerlab").string();
    return (std::filesystem::temp_directory_path() / "jokerlab-cache").string();
}

void require_known(const std::string& what, const std::string& name,
                   const std::vector<std::string>& valid) {
    for (const std::string& v : valid)
        if (v == name) return;
    throw jl::Error("unknown " + what + " '" + name + "' (valid: " + join(valid, ", ") + ")");
}

int run_verify(const std::string& filter, bool json) {
    jl::VerificationReport report = jl::verify_paper(filter);
    std::cout << (json ? jl::report_to_json(report) : jl::report_to_text(report));
    return jl::report_ok(report) ? 0 : 1;
}

int run_module_check(const std::string& path, bool json) {
    jl::GModule m = jl::load_module_file(path);
    std::size_t pairs = m.group().order() * m.group().order();
    if (json) {
        nlohmann::json doc;
        doc["file"] = path;
        doc["field"] = jl::field_name(m.field());
        doc["group"] = m.group().label();
        doc["dimension"] = m.dim();
        doc["action_pairs_checked"] = pairs;
        doc["ok"] = true;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    print_kv("file", path);
    print_kv("field", jl::field_name(m.field()));
    print_kv("group", m.group().label());
    print_kv("dimension", std::to_string(m.dim()));
    print_kv("action law", "verified on all " + std::to_string(pairs) + " group pairs");
    print_kv("status", "ok");
    return 0;
}

int run_ext(const std::string& group_name, const std::string& field_name,
            std::size_t max_degree, const std::string& cache_dir, bool json) {
    jl::FiniteField field = jl::named_field(field_name);
    jl::FiniteGroup group = jl::named_group(group_name);
    jl::CachedResolution cached =
        jl::cached_minimal_resolution(cache_dir, field, group, max_degree);
    if (json) {
        std::cout << jl::resolution_to_json(cached.res);
        return 0;
    }
    print_kv("resolution", "minimal resolution of k over " + field_name + "[" + group_name +
                               "], length " + std::to_string(max_degree));
    print_kv("cache", cached.path);
    std::cout << "\ndegree  betti\n";
    for (std::size_t d = 0; d < cached.res.ranks.size(); ++d) {
        std::string left = std::to_string(d), right = std::to_string(cached.res.ranks[d]);
        std::cout << std::string(6 - std::min<std::size_t>(6, left.size()), ' ') << left
                  << "  " << std::string(5 - std::min<std::size_t>(5, right.size()), ' ')
                  << right << "\n";
    }
    return 0;
}

/* Renders a degree-2 class in generator notation a*u^2 + b*v^2; falls back
 * to the raw coefficient vector if it is outside the span. */
std::string degree2_str(const jl::ExtRing& ext, const jl::CohomClass& uu,
                        const jl::CohomClass& vv, const jl::CohomClass& c) {
    for (const jl::FieldElement& a : ext.field().elements())
        for (const jl::FieldElement& b : ext.field().elements()) {
            jl::CohomClass combo = ext.add(ext.scale(a, uu), ext.scale(b, vv));
            if (combo.coeffs != c.coeffs) continue;
            std::vector<std::string> terms;
            if (!a.is_zero()) terms.push_back(a.is_one() ? "u^2" : a.str() + "*u^2");
            if (!b.is_zero()) terms.push_back(b.is_one() ? "v^2" : b.str() + "*v^2");
            return terms.empty() ? "0" : join(terms, " + ");
        }
    return "[" + ext.str(c) + "]";
}

int run_massey(bool json) {
    jl::FiniteField f4 = jl::FiniteField::f4();
    jl::ExtRing ext(jl::minimal_resolution(f4, jl::make_q8(), 8));
    auto [u, v] = ext.generators_uv();
    jl::CohomClass a = ext.add(u, ext.scale(f4.omega2(), v));  // u + w2 v
    jl::CohomClass b = ext.add(u, ext.scale(f4.omega(), v));   // u + w v
    jl::CohomClass uu = ext.cup(u, u), vv = ext.cup(v, v);

    struct Row {
        std::string label;
        jl::ExtRing::Massey bracket;
        std::string square_label;
        jl::CohomClass square;
    };
    std::vector<Row> rows;
    rows.push_back({"<u + w2 v, u + w v, u + w2 v>", ext.massey_triple(a, b, a),
                    "(u + w v)^2", ext.cup(b, b)});
    rows.push_back({"<u + w v, u + w2 v, u + w v>", ext.massey_triple(b, a, b),
                    "(u + w2 v)^2", ext.cup(a, a)});

    nlohmann::json doc;
    doc["ring"] = "Ext over f4[q8], generators u, v in degree 1";
    nlohmann::json brackets = nlohmann::json::array();
    bool first = true;
    for (const Row& row : rows) {
        std::vector<std::string> indet, elements;
        for (const jl::CohomClass& g : row.bracket.indeterminacy)
            indet.push_back(degree2_str(ext, uu, vv, g));
        for (const jl::CohomClass& e : ext.massey_elements(row.bracket))
            elements.push_back(degree2_str(ext, uu, vv, e));
        bool contains = ext.massey_contains(row.bracket, row.square);
        if (json) {
            nlohmann::json entry;
            entry["bracket"] = row.label;
            entry["representative"] =
                degree2_str(ext, uu, vv, row.bracket.representative);
            entry["indeterminacy"] = indet;
            entry["elements"] = elements;
            entry["contains"] = row.square_label;
            entry["contains_value"] = degree2_str(ext, uu, vv, row.square);
            entry["contains_holds"] = contains;
            brackets.push_back(std::move(entry));
        } else {
            if (!first) std::cout << "\n";
            first = false;
            print_kv("bracket", row.label);
            print_kv("represented", degree2_str(ext, uu, vv, row.bracket.representative));
            std::vector<std::string> spans;
            for (const std::string& g : indet) spans.push_back("k{" + g + "}");
            print_kv("indet", spans.empty() ? "0" : join(spans, " + "));
            print_kv("elements", join(elements, ", "));
            print_kv("contains", row.square_label + " = " +
                                     degree2_str(ext, uu, vv, row.square) + ": " +
                                     (contains ? "yes" : "NO"));
        }
        if (!contains) return 1;
    }
    if (json) {
        doc["brackets"] = std::move(brackets);
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

int run_endotrivial(const std::string& name, bool json) {
    require_known("module", name, jl::builtin_module_names());
    jl::GModule m = jl::builtin_module(name);
    bool verdict = jl::endotrivial(m);
    if (json) {
        nlohmann::json doc;
        doc["module"] = name;
        doc["field"] = jl::field_name(m.field());
        doc["group"] = m.group().label();
        doc["dimension"] = m.dim();
        doc["endotrivial"] = verdict;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    print_kv("module", name);
    print_kv("field", jl::field_name(m.field()));
    print_kv("group", m.group().label());
    print_kv("dimension", std::to_string(m.dim()));
    print_kv("endotrivial", verdict ? "true" : "false");
    return 0;
}

int run_teichmuller(const std::string& element, std::size_t count, bool json) {
    if (count < 1 || count > 124)
        throw jl::Error("digit count must be between 1 and 124");
    unsigned prec = static_cast<unsigned>(std::max<std::size_t>(4, (count + 1) / 2));
    jl::Q8Embedding emb = jl::q8_embed(prec);
    std::vector<std::string> names;
    for (std::size_t g = 0; g < emb.q8.order(); ++g) names.push_back(emb.q8.name_of(g));
    require_known("element", element, names);
    std::vector<jl::FieldElement> digits =
        jl::teichmuller_digits(jl::FiniteField::f4(), emb.images[emb.q8.index_of(element)],
                               count);
    std::vector<std::string> tokens;
    for (const jl::FieldElement& d : digits) tokens.push_back(d.str());
    if (json) {
        nlohmann::json doc;
        doc["element"] = element;
        doc["digits"] = tokens;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << join(tokens, ", ") << "\n";
    return 0;
}

int run_coaction(const std::string& spec_path, const std::string& builtin_name, bool json) {
    jl::CoactionSpec spec;
    if (!spec_path.empty()) {
        spec = jl::load_coaction_spec(spec_path);
    } else {
        require_known("coaction", builtin_name, jl::builtin_coaction_names());
        spec = jl::builtin_coaction_spec(builtin_name);
    }
    jl::FiniteField f4 = jl::FiniteField::f4();
    jl::Q8Embedding emb = jl::q8_embed(8);
    std::vector<std::string> sources;
    for (const jl::CoactionEntry& e : spec.entries)
        sources.push_back(e.source + "(" + std::to_string(e.degree) + ")");

    if (jl::has_unknowns(spec)) {
        jl::CompletionReport rep = jl::complete_coaction(spec, f4, emb);
        nlohmann::json completions = nlohmann::json::array();
        std::vector<std::string> lines;
        for (std::size_t i = 0; i < rep.completed.size(); ++i) {
            std::vector<std::string> scalars;
            for (const jl::FieldElement& s : rep.assignments[i]) scalars.push_back(s.str());
            bool endo = jl::endotrivial(jl::evaluate_coaction(rep.completed[i], f4, emb)
                                            .left_module);
            completions.push_back({{"assignment", scalars}, {"endotrivial", endo}});
            lines.push_back("[" + join(scalars, ", ") + "]  endotrivial " +
                            (endo ? "true" : "false"));
        }
        if (json) {
            nlohmann::json doc;
            doc["coaction"] = spec.name;
            doc["basis"] = sources;
            doc["completions"] = std::move(completions);
            doc["center_trivial_in_all"] = rep.center_trivial_in_all;
            std::cout << doc.dump(2) << "\n";
            return 0;
        }
        print_kv("coaction", spec.name);
        print_kv("basis", join(sources, " "));
        print_kv("completions", std::to_string(rep.completed.size()));
        for (const std::string& line : lines) std::cout << "  " << line << "\n";
        print_kv("center", rep.center_trivial_in_all ? "acts trivially in every completion"
                                                     : "acts NONtrivially somewhere");
        return 0;
    }

    jl::CoactionEvaluation ev = jl::evaluate_coaction(spec, f4, emb);
    bool law = jl::right_matrices_form_action(emb.q8, ev.right_matrices);
    if (json) {
        nlohmann::json doc;
        doc["coaction"] = spec.name;
        doc["basis"] = sources;
        nlohmann::json matrices = nlohmann::json::object();
        for (std::size_t g = 0; g < emb.q8.order(); ++g)
            matrices[emb.q8.name_of(g)] = ev.right_matrices[g].to_text();
        doc["right_matrices"] = std::move(matrices);
        doc["group_law"] = law;
        std::cout << doc.dump(2) << "\n";
        return law ? 0 : 1;
    }
    print_kv("coaction", spec.name);
    print_kv("basis", join(sources, " "));
    print_kv("group law", law ? "verified on all 64 pairs" : "VIOLATED");
    std::cout << "\nright action matrices (columns are images)\n";
    for (std::size_t g = 0; g < emb.q8.order(); ++g) {
        std::cout << emb.q8.name_of(g) << "\n";
        print_block(ev.right_matrices[g].to_text());
    }
    return law ? 0 : 1;
}

int run_hecke(const std::string& group_name, const std::string& subgroup_name, bool json) {
    require_known("group", group_name, {"g24"});
    require_known("subgroup", subgroup_name, {"c3"});
    jl::FiniteField f4 = jl::FiniteField::f4();
    jl::GradedAlgebraAction action = jl::g24_graded_action(f4);
    jl::Subgroup c3(action.group, {0, 8, 16});
    jl::HeckeContext ctx = jl::hecke_context(action, c3);
    std::vector<jl::HeckeElement> basis = jl::hecke_basis(ctx);
    jl::G24FixedPointData data = jl::g24_module_and_fixed_points(f4);
    std::vector<std::string> names, renders, matrices;
    for (std::size_t i : data.fixed_basis) names.push_back(data.module.names[i]);
    for (const jl::HeckeElement& b : basis) {
        renders.push_back(jl::hecke_str(ctx, b));
        matrices.push_back(
            jl::hecke_action_matrix(ctx, b, data.module, data.fixed_basis).to_text());
    }
    if (json) {
        nlohmann::json doc;
        doc["group"] = group_name;
        doc["subgroup"] = subgroup_name;
        doc["basis"] = renders;
        doc["fixed_points"] = names;
        doc["matrices"] = matrices;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    print_kv("algebra", "double cosets of " + subgroup_name + " in " + group_name +
                            " over f4 Laurent series in u");
    print_kv("rank", std::to_string(basis.size()));
    std::cout << "\nbasis\n";
    for (std::size_t i = 0; i < renders.size(); ++i)
        std::cout << "  " << (i + 1) << "  " << renders[i] << "\n";
    std::cout << "\naction on " << join(names, ", ") << " (columns are images)\n";
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        std::cout << "element " << (i + 1) << "\n";
        print_block(matrices[i]);
    }
    return 0;
}

int run_dump_group(const std::string& name) {
    jl::FiniteGroup group = jl::named_group(name);
    std::cout << jl::group_to_json(group);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular representation computations for quaternionic groups"};
    app.set_version_flag("--version", std::string("jokerlab ") + jl::artifact_version);
    app.require_subcommand(1);
    int rc = 0;

    auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
    std::string filter;
    bool verify_json = false;
    verify->add_option("filter", filter, "check-id prefix to select a subset");
    verify->add_flag("--json", verify_json, "emit the report as JSON");
    verify->callback([&] { rc = run_verify(filter, verify_json); });

    auto* module_cmd = app.add_subcommand("module", "load and validate a module file");
    std::string module_path;
    bool module_json = false;
    module_cmd->add_option("--check", module_path, "module definition JSON file")
        ->required();
    module_cmd->add_flag("--json", module_json, "emit the result as JSON");
    module_cmd->callback([&] { rc = run_module_check(module_path, module_json); });

    auto* ext_cmd = app.add_subcommand("ext", "minimal resolution and Betti numbers");
    std::string ext_group = "q8", ext_field = "f4";
    std::size_t ext_degree = 8;
    std::string cache_dir = default_cache_dir();
    bool ext_json = false;
    ext_cmd->add_option("--group", ext_group, "group name")->capture_default_str();
    ext_cmd->add_option("--field", ext_field, "coefficient field")->capture_default_str();
    ext_cmd->add_option("--max-degree", ext_degree, "length of the resolution")
        ->capture_default_str();
    ext_cmd->add_option("--cache-dir", cache_dir, "resolution cache directory")
        ->envname("JOKERLAB_CACHE_DIR")
        ->capture_default_str();
    ext_cmd->add_flag("--json", ext_json, "emit the cached resolution as JSON");
    ext_cmd->callback(
        [&] { rc = run_ext(ext_group, ext_field, ext_degree, cache_dir, ext_json); });

    auto* massey_cmd =
        app.add_subcommand("massey", "triple products of the degree-1 generators");
    bool massey_json = false;
    massey_cmd->add_flag("--json", massey_json, "emit the brackets as JSON");
    massey_cmd->callback([&] { rc = run_massey(massey_json); });

    auto* endo_cmd = app.add_subcommand("endotrivial", "test a built-in module");
    std::string endo_name;
    bool endo_json = false;
    endo_cmd->add_option("--module", endo_name, "built-in module name")->required();
    endo_cmd->add_flag("--json", endo_json, "emit the verdict as JSON");
    endo_cmd->callback([&] { rc = run_endotrivial(endo_name, endo_json); });

    auto* teich_cmd =
        app.add_subcommand("teichmuller", "digit expansion of an embedded group element");
    std::string teich_element;
    std::size_t teich_digits = 3;
    bool teich_json = false;
    teich_cmd->add_option("--element", teich_element, "group element name")->required();
    teich_cmd->add_option("--digits", teich_digits, "number of digits")
        ->capture_default_str();
    teich_cmd->add_flag("--json", teich_json, "emit the digits as JSON");
    teich_cmd->callback([&] { rc = run_teichmuller(teich_element, teich_digits, teich_json); });

    auto* coaction_cmd =
        app.add_subcommand("coaction", "evaluate a coaction to action matrices");
    std::string coaction_spec, coaction_name;
    bool coaction_json = false;
    auto* spec_opt =
        coaction_cmd->add_option("--spec", coaction_spec, "coaction spec JSON file");
    coaction_cmd->add_option("--name", coaction_name, "built-in coaction name")
        ->excludes(spec_opt);
    coaction_cmd->add_flag("--json", coaction_json, "emit matrices as JSON");
    coaction_cmd->callback([&] {
        if (coaction_spec.empty() && coaction_name.empty())
            throw jl::Error("coaction requires --spec <file> or --name <builtin> (valid: " +
                            join(jl::builtin_coaction_names(), ", ") + ")");
        rc = run_coaction(coaction_spec, coaction_name, coaction_json);
    });

    auto* hecke_cmd = app.add_subcommand("hecke", "double-coset algebra and its action");
    std::string hecke_group = "g24", hecke_subgroup = "c3";
    bool hecke_json = false;
    hecke_cmd->add_option("--group", hecke_group, "ambient group")->capture_default_str();
    hecke_cmd->add_option("--subgroup", hecke_subgroup, "subgroup")->capture_default_str();
    hecke_cmd->add_flag("--json", hecke_json, "emit basis and matrices as JSON");
    hecke_cmd->callback([&] { rc = run_hecke(hecke_group, hecke_subgroup, hecke_json); });

    auto* group_cmd = app.add_subcommand("group", "serialize a named group");
    std::string dump_name;
    group_cmd->add_option("--dump-group", dump_name, "group to dump as JSON")->required();
    group_cmd->callback([&] { rc = run_dump_group(dump_name); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const jl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
