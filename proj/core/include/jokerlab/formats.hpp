#pragma once

#include <string>
#include <vector>

#include "jokerlab/coaction.hpp"
#include "jokerlab/gmodule.hpp"
#include "jokerlab/resolution.hpp"

namespace jokerlab {

/* Version stamp written into every cache and report; bump on any change that
 * invalidates stored artifacts. */
extern const char* const artifact_version;

/* Named lookups shared by file formats and the CLI. */
FiniteField named_field(const std::string& name);  // f2, f4
std::vector<std::string> named_field_names();
std::string field_name(const FiniteField& field);

FiniteGroup named_group(const std::string& name);  // q8, c3, klein4, g24
std::vector<std::string> named_group_names();

/* JSON object {order, names, table}; table is the row-major multiplication
 * table of element indices. */
std::string group_to_json(const FiniteGroup& group);

/* Module-definition document: JSON {field, group, generators: {name:
 * matrix-text}}.  Loading resolves the named field and group, parses each
 * generator matrix, and completes the action, so a successful load IS the
 * module check. */
std::string module_to_json(const GModule& m);
GModule module_from_json(const std::string& text);
GModule load_module_file(const std::string& path);

/* Resolution document: JSON {artifact, field, group, ranks, differentials:
 * [matrix-text]}.  Loading re-verifies exactness and minimality. */
std::string resolution_to_json(const FreeResolution& res);
FreeResolution resolution_from_json(const std::string& text);

/* Cache location <dir>/<group>-<field>-len<N>-v<artifact>.json. */
std::string resolution_cache_path(const std::string& dir, const FiniteGroup& group,
                                  const FiniteField& field, std::size_t length);

/* Loads the cached resolution when present and valid for the current artifact
 * version; otherwise computes, stores, and returns it.  An unreadable or
 * stale cache entry is recomputed and overwritten, never trusted. */
struct CachedResolution {
    FreeResolution res;
    bool from_cache;
    std::string path;
};
CachedResolution cached_minimal_resolution(const std::string& dir, const FiniteField& field,
                                           const FiniteGroup& group, std::size_t length);

/* Coaction document: JSON list of {source, degree, terms}, one entry per
 * basis element in triangular order; each term is {coeff, monomial, u_power,
 * target} with coeff in {0, 1, w, w2, ?}, monomial a product like "a1^2*a2"
 * (or "1"), and target the name of an earlier-or-equal source. */
std::string coaction_spec_to_json(const CoactionSpec& spec);
CoactionSpec coaction_spec_from_json(const std::string& text, const std::string& name);
CoactionSpec load_coaction_spec(const std::string& path);  // name = file stem

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace jokerlab
