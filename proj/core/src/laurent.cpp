#include "jokerlab/laurent.hpp"

#include <sstream>

namespace jokerlab {

namespace {

long parse_exponent(std::string_view text) {
    std::string token(text);
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(token, &used);
    } catch (const std::exception&) {
        throw Error("cannot parse u exponent '" + token + "'");
    }
    if (used != token.size()) throw Error("cannot parse u exponent '" + token + "'");
    return value;
}

/* A u-factor is "u" or "u^e". */
long parse_u_factor(std::string_view text) {
    if (text == "u") return 1;
    if (text.size() > 2 && text.substr(0, 2) == "u^") return parse_exponent(text.substr(2));
    throw Error("cannot parse laurent factor '" + std::string(text) + "'");
}

}  // namespace

LaurentElement::LaurentElement(FiniteField field) : field_(std::move(field)) {}

LaurentElement LaurentElement::monomial(const FieldElement& coeff, long exp) {
    LaurentElement out(coeff.field());
    out.add_term(exp, coeff.bits());
    return out;
}

LaurentElement LaurentElement::constant(const FieldElement& coeff) {
    return monomial(coeff, 0);
}

LaurentElement LaurentElement::u_power(const FiniteField& field, long exp) {
    return monomial(field.one(), exp);
}

LaurentElement LaurentElement::parse(const FiniteField& field, std::string_view text) {
    std::string whole(text);
    if (whole.empty()) throw Error("cannot parse empty laurent token");
    LaurentElement out(field);
    std::size_t start = 0;
    while (start <= whole.size()) {
        std::size_t stop = whole.find('+', start);
        if (stop == std::string::npos) stop = whole.size();
        std::string term = whole.substr(start, stop - start);
        if (term.empty()) throw Error("cannot parse laurent token '" + whole + "'");
        std::size_t star = term.find('*');
        FieldElement coeff = field.one();
        long exp = 0;
        if (star != std::string::npos) {
            coeff = field.parse(term.substr(0, star));
            exp = parse_u_factor(term.substr(star + 1));
        } else if (term[0] == 'u') {
            exp = parse_u_factor(term);
        } else {
            coeff = field.parse(term);
        }
        out.add_term(exp, coeff.bits());
        start = stop + 1;
        if (stop == whole.size()) break;
    }
    return out;
}

void LaurentElement::add_term(long exp, unsigned bits) {
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
        if (bits != 0) coeffs_.emplace(exp, bits);
        return;
    }
    unsigned merged = (field_.element(it->second) + field_.element(bits)).bits();
    if (merged == 0)
        coeffs_.erase(it);
    else
        it->second = merged;
}

FieldElement LaurentElement::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return field_.element(it == coeffs_.end() ? 0u : it->second);
}

std::vector<std::pair<long, FieldElement>> LaurentElement::terms() const {
    std::vector<std::pair<long, FieldElement>> out;
    out.reserve(coeffs_.size());
    for (const auto& [exp, bits] : coeffs_) out.emplace_back(exp, field_.element(bits));
    return out;
}

LaurentElement LaurentElement::operator+(const LaurentElement& rhs) const {
    if (field_ != rhs.field_) throw Error("laurent sum over different fields");
    LaurentElement out = *this;
    for (const auto& [exp, bits] : rhs.coeffs_) out.add_term(exp, bits);
    return out;
}

LaurentElement LaurentElement::operator-(const LaurentElement& rhs) const {
    return *this + rhs;
}

LaurentElement LaurentElement::operator*(const LaurentElement& rhs) const {
    if (field_ != rhs.field_) throw Error("laurent product over different fields");
    LaurentElement out(field_);
    for (const auto& [ea, ba] : coeffs_)
        for (const auto& [eb, bb] : rhs.coeffs_) {
            unsigned bits = (field_.element(ba) * field_.element(bb)).bits();
            out.add_term(ea + eb, bits);
        }
    return out;
}

bool LaurentElement::operator==(const LaurentElement& rhs) const {
    return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

LaurentElement LaurentElement::scaled(const FieldElement& c) const {
    LaurentElement out(field_);
    for (const auto& [exp, bits] : coeffs_)
        out.add_term(exp, (field_.element(bits) * c).bits());
    return out;
}

LaurentElement LaurentElement::shifted(long exp) const {
    LaurentElement out(field_);
    for (const auto& [e, bits] : coeffs_) out.add_term(e + exp, bits);
    return out;
}

std::string LaurentElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, bits] : coeffs_) {
        if (!first) out << '+';
        first = false;
        std::string coeff = field_.element(bits).str();
        if (exp == 0) {
            out << coeff;
            continue;
        }
        std::string upart = exp == 1 ? "u" : "u^" + std::to_string(exp);
        if (bits == 1)
            out << upart;
        else
            out << coeff << '*' << upart;
    }
    return out.str();
}

LaurentMatrix::LaurentMatrix(FiniteField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, LaurentElement(field_)) {}

LaurentMatrix LaurentMatrix::identity(const FiniteField& field, std::size_t n) {
    LaurentMatrix out(field, n, n);
    for (std::size_t d = 0; d < n; ++d) out.set(d, d, LaurentElement::constant(field.one()));
    return out;
}

LaurentMatrix LaurentMatrix::parse_text(const FiniteField& field, std::string_view text) {
    std::vector<std::vector<LaurentElement>> rows;
    std::string whole(text);
    std::istringstream lines(whole);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream words(line);
        std::vector<LaurentElement> row;
        std::string token;
        while (words >> token) row.push_back(LaurentElement::parse(field, token));
        if (row.empty()) continue;
        if (!rows.empty() && rows.front().size() != row.size())
            throw Error("laurent matrix rows have unequal lengths");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error("laurent matrix text has no rows");
    LaurentMatrix out(field, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) out.set(r, c, rows[r][c]);
    return out;
}

const LaurentElement& LaurentMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error("laurent matrix index out of range");
    return entries_[r * cols_ + c];
}

void LaurentMatrix::set(std::size_t r, std::size_t c, const LaurentElement& value) {
    if (r >= rows_ || c >= cols_) throw Error("laurent matrix index out of range");
    if (value.field() != field_) throw Error("laurent matrix entry over a different field");
    entries_[r * cols_ + c] = value;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw Error("laurent matrix sum shape mismatch");
    LaurentMatrix out(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] + rhs.entries_[k];
    return out;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& rhs) const {
    if (cols_ != rhs.rows_ || field_ != rhs.field_)
        throw Error("laurent matrix product shape mismatch");
    LaurentMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const LaurentElement& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const LaurentElement& b = rhs.at(k, c);
                if (b.is_zero()) continue;
                out.set(r, c, out.at(r, c) + a * b);
            }
        }
    return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentElement& c) const {
    LaurentMatrix out(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * c;
    return out;
}

LaurentMatrix LaurentMatrix::column(std::size_t c) const {
    LaurentMatrix out(field_, rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) out.set(r, 0, at(r, c));
    return out;
}

bool LaurentMatrix::is_zero() const {
    for (const LaurentElement& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::string LaurentMatrix::to_text() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << at(r, c).str();
        }
        if (r + 1 < rows_) out << '\n';
    }
    return out.str();
}

}  // namespace jokerlab
