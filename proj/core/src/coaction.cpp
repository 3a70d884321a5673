#include "jokerlab/coaction.hpp"

#include <algorithm>

namespace jokerlab {

namespace {

bool is_known_token(const std::string& t) {
    return t == "0" || t == "1" || t == "w" || t == "w2";
}

std::size_t digits_needed(const CoactionSpec& spec) {
    std::size_t need = 1;
    for (const auto& e : spec.entries)
        for (const auto& t : e.terms) need = std::max(need, t.alpha.size());
    return need;
}

}  // namespace

void validate_coaction_spec(const CoactionSpec& spec) {
    if (spec.entries.empty()) throw Error("coaction spec has no basis elements");
    for (std::size_t s = 0; s < spec.entries.size(); ++s) {
        const CoactionEntry& e = spec.entries[s];
        std::size_t diagonal_terms = 0;
        for (const CoactionTerm& t : e.terms) {
            if (t.target > s)
                throw Error("coaction spec not triangular: " + e.source +
                            " hits a later basis element");
            if (!is_known_token(t.coeff) && t.coeff != "?")
                throw Error("coaction spec: unknown coefficient token " + t.coeff);
            long gap = e.degree - spec.entries[t.target].degree;
            if (gap < 0 || gap % 2 != 0 || t.u_power != gap / 2)
                throw Error("coaction spec: u power of a " + e.source +
                            " term does not match the degree gap");
            if (t.target == s) {
                ++diagonal_terms;
                for (std::size_t r = 1; r < t.alpha.size(); ++r)
                    if (t.alpha[r] != 0)
                        throw Error("coaction spec: diagonal term of " + e.source +
                                    " is not a power of alpha_0");
                if (t.coeff != "1")
                    throw Error("coaction spec: diagonal coefficient of " + e.source +
                                " must be 1");
            }
        }
        if (diagonal_terms != 1)
            throw Error("coaction spec: " + e.source +
                        " needs exactly one diagonal term");
    }
}

bool has_unknowns(const CoactionSpec& spec) {
    for (const auto& e : spec.entries)
        for (const auto& t : e.terms)
            if (t.coeff == "?") return true;
    return false;
}

FieldElement alpha_eval(const FiniteField& f4, std::size_t k, const O2Element& g) {
    return teichmuller_digits(f4, g, k + 1).at(k);
}

Matrix coaction_matrix(const CoactionSpec& spec, const FiniteField& f4,
                       const O2Element& g, ActionSide side) {
    validate_coaction_spec(spec);
    std::vector<FieldElement> digits = teichmuller_digits(f4, g, digits_needed(spec));
    const std::size_t n = spec.entries.size();
    Matrix m(f4, n, n);
    for (std::size_t s = 0; s < n; ++s) {
        for (const CoactionTerm& t : spec.entries[s].terms) {
            if (t.coeff == "?")
                throw Error("coaction spec has undetermined coefficients; "
                            "complete it before evaluating");
            FieldElement val = f4.parse(t.coeff);
            for (std::size_t r = 0; r < t.alpha.size(); ++r)
                val = val * digits[r].pow(static_cast<long>(t.alpha[r]));
            m.set(t.target, s, m.at(t.target, s) + val);
        }
    }
    return side == ActionSide::right ? m : m.transpose();
}

bool right_matrices_form_action(const FiniteGroup& group,
                                const std::vector<Matrix>& right_matrices) {
    if (right_matrices.size() != group.order()) return false;
    if (!right_matrices[group.identity()].is_identity()) return false;
    for (std::size_t g = 0; g < group.order(); ++g)
        for (std::size_t h = 0; h < group.order(); ++h)
            if (right_matrices[g] * right_matrices[h] != right_matrices[group.mul(h, g)])
                return false;
    return true;
}

CoactionEvaluation evaluate_coaction(const CoactionSpec& spec, const FiniteField& f4,
                                     const Q8Embedding& emb) {
    std::vector<Matrix> right;
    for (std::size_t g = 0; g < emb.q8.order(); ++g)
        right.push_back(coaction_matrix(spec, f4, emb.images[g], ActionSide::right));
    for (std::size_t g = 0; g < emb.q8.order(); ++g)
        for (std::size_t h = 0; h < emb.q8.order(); ++h)
            if (right[g] * right[h] != right[emb.q8.mul(h, g)])
                throw Error("coaction matrices violate the group law at the pair (" +
                            emb.q8.name_of(g) + ", " + emb.q8.name_of(h) + ")");
    std::vector<Matrix> left;
    for (const Matrix& m : right) left.push_back(m.transpose());
    return CoactionEvaluation{right, GModule(f4, emb.q8, left)};
}

CompletionReport complete_coaction(const CoactionSpec& spec, const FiniteField& f4,
                                   const Q8Embedding& emb) {
    validate_coaction_spec(spec);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t s = 0; s < spec.entries.size(); ++s)
        for (std::size_t t = 0; t < spec.entries[s].terms.size(); ++t)
            if (spec.entries[s].terms[t].coeff == "?") slots.push_back({s, t});
    if (slots.size() > 10)
        throw Error("too many undetermined coefficients to enumerate");

    std::vector<std::size_t> center = emb.q8.center();
    CompletionReport report{{}, {}, true};
    std::size_t total = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) total *= f4.size();

    for (std::size_t code = 0; code < total; ++code) {
        CoactionSpec candidate = spec;
        std::vector<FieldElement> assignment;
        std::size_t rem = code;
        std::size_t scale = total;
        for (const auto& [es, ts] : slots) {
            scale /= f4.size();
            FieldElement value = f4.element(static_cast<unsigned>(rem / scale));
            rem %= scale;
            candidate.entries[es].terms[ts].coeff = value.str();
            assignment.push_back(value);
        }
        std::vector<Matrix> right;
        for (std::size_t g = 0; g < emb.q8.order(); ++g)
            right.push_back(coaction_matrix(candidate, f4, emb.images[g],
                                            ActionSide::right));
        if (!right_matrices_form_action(emb.q8, right)) continue;
        for (std::size_t z : center)
            if (!right[z].is_identity()) report.center_trivial_in_all = false;
        report.assignments.push_back(std::move(assignment));
        report.completed.push_back(std::move(candidate));
    }
    return report;
}

namespace {

CoactionTerm term(std::size_t target, std::vector<unsigned> alpha, long u,
                  std::string coeff = "1") {
    return CoactionTerm{target, std::move(alpha), u, std::move(coeff)};
}

}  // namespace

CoactionSpec builtin_coaction_spec(const std::string& name) {
    if (name == "cone_eta")
        return CoactionSpec{
            "cone_eta",
            {{"xbar0", 0, {term(0, {}, 0)}},
             {"xbar2", 2, {term(0, {0, 1}, 1), term(1, {1}, 0)}}}};
    if (name == "cone_nu")
        return CoactionSpec{
            "cone_nu",
            {{"ybar0", 0, {term(0, {}, 0)}},
             {"ybar4", 4, {term(0, {0, 2}, 2), term(1, {2}, 0)}}}};
    if (name == "three_cell")
        return CoactionSpec{
            "three_cell",
            {{"zbar0", 0, {term(0, {}, 0)}},
             {"zbar4", 4, {term(0, {0, 2}, 2), term(1, {2}, 0)}},
             {"zbar6", 6, {term(0, {0, 0, 1}, 3), term(1, {2, 1}, 1), term(2, {}, 0)}}}};
    if (name == "cone_sigma")
        return CoactionSpec{
            "cone_sigma",
            {{"xbar0", 0, {term(0, {}, 0)}},
             {"xbar8", 8,
              {term(0, {0, 4}, 4), term(0, {0, 1}, 4), term(1, {1}, 0)}}}};
    if (name == "sigma_nu_partial")
        return CoactionSpec{
            "sigma_nu_partial",
            {{"zbar0", 0, {term(0, {}, 0)}},
             {"zbar8", 8, {term(1, {1}, 0)}},
             {"zbar12", 12,
              {term(0, {0, 0, 1}, 6, "?"), term(0, {0, 3}, 6, "?"),
               term(0, {0, 3, 1}, 6, "?"), term(0, {0, 0, 2}, 6, "?"),
               term(1, {0, 2}, 2), term(2, {2}, 0)}}}};
    throw Error("unknown coaction spec: " + name +
                " (expected one of cone_eta, cone_nu, three_cell, cone_sigma, "
                "sigma_nu_partial)");
}

std::vector<std::string> builtin_coaction_names() {
    return {"cone_eta", "cone_nu", "three_cell", "cone_sigma", "sigma_nu_partial"};
}

}  // namespace jokerlab
