#include "wplink/polynomial.hpp"

#include "wplink/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace wplink {

int Monomial::total_degree() const {
    int t = 0;
    for (int e : exponents) t += e;
    return t;
}

long long monomial_degree(const std::vector<int>& exponents,
                          const std::vector<long long>& weights) {
    if (exponents.size() != weights.size())
        fail(errc::length_mismatch, "exponent vector has " + std::to_string(exponents.size()) +
                                        " entries for " + std::to_string(weights.size()) +
                                        " weights");
    Int d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (exponents[i] < 0)
            fail(errc::invalid_argument, "negative exponent " + std::to_string(exponents[i]));
        d += Int(exponents[i]) * weights[i];
    }
    return to_ll(d);
}

WeightedPolynomial WeightedPolynomial::make(std::vector<long long> weights,
                                            std::vector<Monomial> terms) {
    // Zero terms contribute nothing; drop them before any degree bookkeeping.
    std::erase_if(terms, [](const Monomial& m) { return m.coefficient == 0; });
    if (terms.empty())
        fail(errc::zero_polynomial, "no nonzero monomials");

    long long degree = monomial_degree(terms.front().exponents, weights);
    for (const Monomial& m : terms) {
        long long d = monomial_degree(m.exponents, weights);
        if (d != degree)
            fail(errc::not_homogeneous, "mixed weighted degrees " + std::to_string(degree) +
                                            " vs " + std::to_string(d));
    }

    std::map<std::vector<int>, Rat> merged;
    for (const Monomial& m : terms) merged[m.exponents] += m.coefficient;

    WeightedPolynomial p;
    for (auto it = merged.rbegin(); it != merged.rend(); ++it)   // descending lex
        if (it->second != 0) p.monomials.push_back({it->first, it->second});
    if (p.monomials.empty())
        fail(errc::zero_polynomial, "all monomials cancel");
    p.system = WeightSystem(std::move(weights), degree);
    return p;
}

bool WeightedPolynomial::uses_variable(std::size_t var) const {
    for (const Monomial& m : monomials)
        if (m.exponents[var] > 0) return true;
    return false;
}

bool WeightedPolynomial::has_linear_term() const {
    for (const Monomial& m : monomials)
        if (m.total_degree() == 1) return true;
    return false;
}

namespace {

const char* kLetterNames[4] = {"x", "y", "z", "t"};

class Parser {
public:
    Parser(const std::string& text, std::size_t arity) : s_(text), arity_(arity) {}

    std::vector<Monomial> parse() {
        std::vector<Monomial> terms;
        skip_ws();
        if (eof()) fail(errc::syntax_error, "empty polynomial");
        bool negative = consume_sign();
        while (true) {
            terms.push_back(parse_term(negative));
            skip_ws();
            if (eof()) break;
            char c = s_[pos_];
            if (c == '+') negative = false;
            else if (c == '-') negative = true;
            else fail(errc::syntax_error, std::string("unexpected '") + c + "' at position " +
                                              std::to_string(pos_));
            ++pos_;
            skip_ws();
            if (eof()) fail(errc::syntax_error, "dangling sign at end of input");
        }
        return terms;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    void skip_ws() { while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }

    bool consume_sign() {
        if (!eof() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            bool neg = s_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    long long parse_uint(const char* what) {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail(errc::syntax_error, std::string("expected ") + what + " at position " +
                                         std::to_string(pos_));
        long long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000000LL)
                fail(errc::syntax_error, std::string("oversized ") + what);
            ++pos_;
        }
        return v;
    }

    /// Variable token, or -1 when the cursor is not on one.
    int try_variable() {
        skip_ws();
        if (eof()) return -1;
        char c = s_[pos_];
        if (c == 'z' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            set_style(2);
            ++pos_;
            long long idx = parse_uint("variable index");
            if (idx >= static_cast<long long>(arity_))
                fail(errc::syntax_error,
                     "variable z" + std::to_string(idx) + " out of range for arity " +
                         std::to_string(arity_));
            return static_cast<int>(idx);
        }
        for (std::size_t i = 0; i < arity_ && i < 4; ++i) {
            if (c == kLetterNames[i][0]) {
                set_style(1);
                ++pos_;
                return static_cast<int>(i);
            }
        }
        return -1;
    }

    void set_style(int st) {
        if (style_ == 0) style_ = st;
        else if (style_ != st)
            fail(errc::syntax_error, "mixed variable naming styles (x,y,z,t vs z0..z3)");
    }

    Monomial parse_term(bool negative) {
        Monomial m;
        m.exponents.assign(arity_, 0);
        m.coefficient = 1;
        skip_ws();

        bool have_factor = false;
        bool expect_factor = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            Int num = parse_uint("coefficient");
            Int den = 1;
            skip_ws();
            if (!eof() && s_[pos_] == '/') {
                ++pos_;
                den = parse_uint("coefficient denominator");
                if (den == 0) fail(errc::syntax_error, "zero denominator");
            }
            m.coefficient = Rat(num, den);
            have_factor = true;
            skip_ws();
            if (!eof() && s_[pos_] == '*') {
                ++pos_;
                expect_factor = true;
            }
        }

        while (true) {
            skip_ws();
            std::size_t before = pos_;
            int var = try_variable();
            if (var < 0) {
                pos_ = before;
                if (expect_factor)
                    fail(errc::syntax_error,
                         "expected a variable at position " + std::to_string(pos_));
                break;
            }
            expect_factor = false;
            int exp = 1;
            skip_ws();
            if (!eof() && s_[pos_] == '^') {
                ++pos_;
                long long e = parse_uint("exponent");
                if (e > 1000000) fail(errc::syntax_error, "oversized exponent");
                exp = static_cast<int>(e);
            }
            m.exponents[static_cast<std::size_t>(var)] += exp;
            have_factor = true;
            skip_ws();
            if (!eof() && s_[pos_] == '*') {
                ++pos_;
                expect_factor = true;
            }
        }

        if (!have_factor)
            fail(errc::syntax_error, "expected a term at position " + std::to_string(pos_));
        if (negative) m.coefficient = -m.coefficient;
        return m;
    }

    const std::string& s_;
    std::size_t arity_;
    std::size_t pos_ = 0;
    int style_ = 0;
};

std::string coefficient_str(const Rat& c) {
    Int num = numerator(c), den = denominator(c);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

} // namespace

WeightedPolynomial parse_polynomial(const std::string& text,
                                    const std::vector<long long>& weights) {
    if (weights.size() < 2 || weights.size() > 4)
        fail(errc::wrong_arity,
             "polynomial arity must be 2..4, got " + std::to_string(weights.size()));
    Parser parser(text, weights.size());
    return WeightedPolynomial::make(weights, parser.parse());
}

std::string to_string(const WeightedPolynomial& p) {
    std::ostringstream os;
    bool first = true;
    for (const Monomial& m : p.monomials) {
        Rat c = m.coefficient;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rat abs_c = neg ? Rat(-c) : c;

        std::vector<std::string> factors;
        if (abs_c != 1) factors.push_back(coefficient_str(abs_c));
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            std::string f = kLetterNames[i];
            if (m.exponents[i] > 1) f += "^" + std::to_string(m.exponents[i]);
            factors.push_back(f);
        }
        if (factors.empty()) factors.push_back(coefficient_str(abs_c));   // pure constant
        for (std::size_t i = 0; i < factors.size(); ++i)
            os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

namespace {

void enumerate_rec(const std::vector<long long>& w, std::size_t i, long long rem,
                   std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (i + 1 == w.size()) {
        if (rem % w[i] == 0) {
            long long e = rem / w[i];
            if (e <= 1000000000) {
                cur[i] = static_cast<int>(e);
                out.push_back(cur);
                cur[i] = 0;
            }
        }
        return;
    }
    long long top = rem / w[i];
    for (long long e = top; e >= 0; --e) {   // descending lexicographic
        cur[i] = static_cast<int>(e);
        enumerate_rec(w, i + 1, rem - e * w[i], cur, out);
    }
    cur[i] = 0;
}

} // namespace

std::vector<std::vector<int>> degree_d_monomials(const std::vector<long long>& weights,
                                                 long long d) {
    if (weights.empty()) fail(errc::wrong_arity, "no weights");
    for (long long wi : weights)
        if (wi <= 0) fail(errc::invalid_argument, "weights must be positive");
    std::vector<std::vector<int>> out;
    if (d < 0) return out;
    std::vector<int> cur(weights.size(), 0);
    enumerate_rec(weights, 0, d, cur, out);
    return out;
}

} // namespace wplink
