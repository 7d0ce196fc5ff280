#include "ncg/hopf.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ncg::hopf {

Laurent Laurent::monomial(int power, GaussianRational c) {
    Laurent l;
    if (!c.isZero()) l.c_[power] = std::move(c);
    return l;
}

Laurent Laurent::operator-() const {
    Laurent l;
    for (const auto& [p, c] : c_) l.c_[p] = -c;
    return l;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [p, c] : o.c_) {
        auto it = c_.find(p);
        if (it == c_.end()) {
            c_[p] = c;
        } else {
            it->second += c;
            if (it->second.isZero()) c_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent l;
    for (const auto& [p1, c1] : c_)
        for (const auto& [p2, c2] : o.c_) {
            GaussianRational v = c1 * c2;
            if (v.isZero()) continue;
            auto it = l.c_.find(p1 + p2);
            if (it == l.c_.end()) {
                l.c_[p1 + p2] = v;
            } else {
                it->second += v;
                if (it->second.isZero()) l.c_.erase(it);
            }
        }
    return l;
}

Laurent Laurent::conj() const {
    Laurent l;
    for (const auto& [p, c] : c_) l.c_[p] = c.conj();
    return l;
}

GaussianRational Laurent::evaluate(const Rational& q) const {
    GaussianRational total;
    for (const auto& [p, c] : c_) {
        Rational power(1);
        for (int k = 0; k < std::abs(p); ++k) power *= q;
        if (p < 0) power = Rational(1) / power;
        total += c * GaussianRational(power);
    }
    return total;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (p != 0) os << "q^" << p;
    }
    return os.str();
}

NCPoly NCPoly::scalar(const Laurent& c) {
    NCPoly p;
    if (!c.isZero()) p.terms_[Word{}] = c;
    return p;
}

NCPoly NCPoly::word(const Word& w, const Laurent& c) {
    NCPoly p;
    if (!c.isZero()) p.terms_[w] = c;
    return p;
}

void NCPoly::add(const Word& w, const Laurent& c) {
    if (c.isZero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
    } else {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly p = *this;
    for (const auto& [w, c] : o.terms_) p.add(w, c);
    return p;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly p = *this;
    for (const auto& [w, c] : o.terms_) p.add(w, -c);
    return p;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly p;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            p.add(w, c1 * c2);
        }
    return p;
}

NCPoly NCPoly::scale(const Laurent& c) const {
    NCPoly p;
    for (const auto& [w, coeff] : terms_) p.add(w, coeff * c);
    return p;
}

Presentation::Presentation(std::vector<Letter> alphabet, std::vector<Rule> rules, std::string name)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), name_(std::move(name)) {
    for (const auto& l : alphabet_)
        if (l.weight < 1) throw std::invalid_argument("Presentation: letter weights must be positive");
    for (const auto& r : rules_) {
        if (r.lhs.empty()) throw std::invalid_argument("Presentation: empty rule left side");
        for (const auto& [w, c] : r.rhs.terms())
            if (!wordLess(w, r.lhs))
                throw std::invalid_argument(
                    "Presentation: rule right side not smaller than its left word (termination)");
    }
}

int Presentation::letterIndex(const std::string& name) const {
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (alphabet_[i].name == name) return static_cast<int>(i);
    return -1;
}

int Presentation::weight(const Word& w) const {
    int total = 0;
    for (auto l : w) total += alphabet_.at(l).weight;
    return total;
}

bool Presentation::wordLess(const Word& a, const Word& b) const {
    int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Presentation su_q2() {
    // letters: 0 = a, 1 = a*, 2 = g, 3 = g*; a-letters carry weight 2 so the
    // sphere relations a*a -> 1 - g*g strictly decrease the order.
    std::vector<Letter> letters = {
        {"a", 2, 1}, {"a*", 2, 0}, {"g", 1, 3}, {"g*", 1, 2}};
    auto qpow = [](int k) { return Laurent::monomial(k); };
    std::vector<Presentation::Rule> rules;
    rules.push_back({{2, 0}, NCPoly::word({0, 2}, qpow(-1))});   // g a -> q^-1 a g
    rules.push_back({{3, 0}, NCPoly::word({0, 3}, qpow(-1))});   // g* a -> q^-1 a g*
    rules.push_back({{2, 1}, NCPoly::word({1, 2}, qpow(1))});    // g a* -> q a* g
    rules.push_back({{3, 1}, NCPoly::word({1, 3}, qpow(1))});    // g* a* -> q a* g*
    rules.push_back({{3, 2}, NCPoly::word({2, 3})});             // g* g -> g g*
    rules.push_back({{1, 0}, NCPoly::unit() - NCPoly::word({3, 2})});  // a* a -> 1 - g* g
    rules.push_back(
        {{0, 1}, NCPoly::unit() - NCPoly::word({2, 3}, qpow(2))});     // a a* -> 1 - q^2 g g*
    return Presentation(std::move(letters), std::move(rules), "su_q2");
}

Presentation sl_q2() {
    // letters: 0 = a, 1 = b, 2 = c, 3 = d; the determinant relation is
    // oriented to eliminate bc (ad-elimination is not confluent).
    std::vector<Letter> letters = {{"a", 1, -1}, {"b", 2, -1}, {"c", 2, -1}, {"d", 1, -1}};
    auto qpow = [](int k) { return Laurent::monomial(k); };
    std::vector<Presentation::Rule> rules;
    rules.push_back({{1, 0}, NCPoly::word({0, 1}, qpow(-1))});  // b a -> q^-1 a b
    rules.push_back({{2, 0}, NCPoly::word({0, 2}, qpow(-1))});  // c a -> q^-1 a c
    rules.push_back({{3, 1}, NCPoly::word({1, 3}, qpow(-1))});  // d b -> q^-1 b d
    rules.push_back({{3, 2}, NCPoly::word({2, 3}, qpow(-1))});  // d c -> q^-1 c d
    NCPoly bcImage = NCPoly::word({0, 3}, qpow(-1)) - NCPoly::scalar(qpow(-1));
    rules.push_back({{1, 2}, bcImage});  // b c -> q^-1(ad - 1)
    rules.push_back({{2, 1}, bcImage});  // c b -> q^-1(ad - 1)
    rules.push_back({{3, 0}, NCPoly::word({0, 3}, qpow(-2)) + NCPoly::scalar(
                                 Laurent(GaussianRational(1)) - qpow(-2))});  // d a
    return Presentation(std::move(letters), std::move(rules), "sl_q2");
}

namespace {

struct Redex {
    std::size_t position;
    std::size_t rule;
};

std::optional<Redex> find_redex(const Word& w, const Presentation& p, Strategy strategy) {
    const auto& rules = p.rules();
    if (strategy == Strategy::LeftmostFirstRule) {
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            for (std::size_t r = 0; r < rules.size(); ++r) {
                const Word& lhs = rules[r].lhs;
                if (pos + lhs.size() > w.size()) continue;
                if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) return Redex{pos, r};
            }
        return std::nullopt;
    }
    for (std::size_t rpos = w.size(); rpos-- > 0;)
        for (std::size_t r = rules.size(); r-- > 0;) {
            const Word& lhs = rules[r].lhs;
            if (rpos + lhs.size() > w.size()) continue;
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + rpos)) return Redex{rpos, r};
        }
    return std::nullopt;
}

}  // namespace

NCPoly normal_form(const NCPoly& poly, const Presentation& p, Strategy strategy) {
    NCPoly::Terms pending = poly.terms();
    NCPoly result;
    long steps = 0;
    const long cap = 1000000;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());  // largest word first
        Word w = it->first;
        Laurent c = it->second;
        pending.erase(it);
        std::optional<Redex> redex = find_redex(w, p, strategy);
        if (!redex) {
            result.add(w, c);
            continue;
        }
        if (++steps > cap)
            throw NonterminationError("normal_form: rewrite step limit exceeded");
        const auto& rule = p.rules()[redex->rule];
        Word prefix(w.begin(), w.begin() + redex->position);
        Word suffix(w.begin() + redex->position + rule.lhs.size(), w.end());
        for (const auto& [rw, rc] : rule.rhs.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            Laurent nc = c * rc;
            if (nc.isZero()) continue;
            auto pit = pending.find(nw);
            if (pit == pending.end()) {
                pending[nw] = nc;
            } else {
                pit->second += nc;
                if (pit->second.isZero()) pending.erase(pit);
            }
        }
    }
    return result;
}

NCPoly star(const NCPoly& poly, const Presentation& p) {
    NCPoly out;
    for (const auto& [w, c] : poly.terms()) {
        Word sw;
        sw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            int partner = p.alphabet().at(*it).star;
            if (partner < 0) throw std::invalid_argument("star: letter has no starred partner");
            sw.push_back(static_cast<std::uint8_t>(partner));
        }
        out.add(sw, c.conj());
    }
    return out;
}

void TensorPoly::add(const std::vector<Word>& w, const Laurent& c) {
    if (c.isZero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms[w] = c;
    } else {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

TensorPoly TensorPoly::multiply(const TensorPoly& o, const Presentation&) const {
    if (arity != o.arity) throw std::invalid_argument("TensorPoly: arity mismatch");
    TensorPoly r;
    r.arity = arity;
    for (const auto& [w1, c1] : terms)
        for (const auto& [w2, c2] : o.terms) {
            std::vector<Word> w(arity);
            for (int s = 0; s < arity; ++s) {
                w[s] = w1[s];
                w[s].insert(w[s].end(), w2[s].begin(), w2[s].end());
            }
            r.add(w, c1 * c2);
        }
    return r;
}

namespace {

TensorPoly tensor_unit(int arity) {
    TensorPoly t;
    t.arity = arity;
    t.add(std::vector<Word>(arity), Laurent(GaussianRational(1)));
    return t;
}

/// Slotwise normal form with re-expansion into tensor terms.
TensorPoly normalize_tensor(const TensorPoly& t, const Presentation& p) {
    TensorPoly out;
    out.arity = t.arity;
    for (const auto& [words, coeff] : t.terms) {
        std::vector<NCPoly> reduced;
        reduced.reserve(words.size());
        for (const auto& w : words) reduced.push_back(normal_form(NCPoly::word(w), p));
        // expand the product of slot polynomials
        std::vector<std::pair<std::vector<Word>, Laurent>> partial = {
            {std::vector<Word>{}, coeff}};
        for (const auto& slotPoly : reduced) {
            std::vector<std::pair<std::vector<Word>, Laurent>> next;
            for (const auto& [ws, c] : partial)
                for (const auto& [w, cw] : slotPoly.terms()) {
                    std::vector<Word> e = ws;
                    e.push_back(w);
                    next.emplace_back(std::move(e), c * cw);
                }
            partial = std::move(next);
        }
        for (auto& [ws, c] : partial) out.add(ws, c);
    }
    return out;
}

void require_su_q2(const Presentation& p, const char* op) {
    if (p.name() != "su_q2")
        throw std::invalid_argument(std::string(op) +
                                    ": only the su_q2 preset carries the Hopf structure "
                                    "(the paper gives no coproduct for sl_q2)");
}

TensorPoly letter_coproduct(int letter) {
    auto q1 = Laurent::monomial(1);
    TensorPoly t;
    t.arity = 2;
    switch (letter) {
        case 0:  // D(a) = a(x)a - q g*(x)g
            t.add({{0}, {0}}, Laurent(GaussianRational(1)));
            t.add({{3}, {2}}, -q1);
            break;
        case 1:  // D(a*) = a*(x)a* - q g(x)g*
            t.add({{1}, {1}}, Laurent(GaussianRational(1)));
            t.add({{2}, {3}}, -q1);
            break;
        case 2:  // D(g) = g(x)a + a*(x)g
            t.add({{2}, {0}}, Laurent(GaussianRational(1)));
            t.add({{1}, {2}}, Laurent(GaussianRational(1)));
            break;
        case 3:  // D(g*) = g*(x)a* + a(x)g*
            t.add({{3}, {1}}, Laurent(GaussianRational(1)));
            t.add({{0}, {3}}, Laurent(GaussianRational(1)));
            break;
        default:
            throw std::logic_error("letter_coproduct: bad letter");
    }
    return t;
}

std::pair<int, Laurent> letter_antipode(int letter) {
    switch (letter) {
        case 0: return {1, Laurent(GaussianRational(1))};    // S(a) = a*
        case 1: return {0, Laurent(GaussianRational(1))};    // S(a*) = a
        case 2: return {2, -Laurent::monomial(1)};           // S(g) = -q g
        case 3: return {3, -Laurent::monomial(-1)};          // S(g*) = -q^-1 g*
        default: throw std::logic_error("letter_antipode: bad letter");
    }
}

}  // namespace

TensorPoly coproduct(const NCPoly& poly, const Presentation& p) {
    require_su_q2(p, "coproduct");
    TensorPoly out;
    out.arity = 2;
    for (const auto& [w, c] : poly.terms()) {
        TensorPoly acc = tensor_unit(2);
        for (auto letter : w) acc = acc.multiply(letter_coproduct(letter), p);
        for (const auto& [ws, cw] : acc.terms) out.add(ws, cw * c);
    }
    return normalize_tensor(out, p);
}

Laurent counit(const NCPoly& poly, const Presentation& p) {
    require_su_q2(p, "counit");
    Laurent total;
    for (const auto& [w, c] : poly.terms()) {
        bool kills = false;
        for (auto letter : w)
            if (letter == 2 || letter == 3) {
                kills = true;
                break;
            }
        if (!kills) total += c;  // eps(a) = eps(a*) = 1, eps(g) = eps(g*) = 0
    }
    return total;
}

NCPoly antipode(const NCPoly& poly, const Presentation& p) {
    require_su_q2(p, "antipode");
    NCPoly out;
    for (const auto& [w, c] : poly.terms()) {
        Word nw;
        nw.reserve(w.size());
        Laurent coeff = c;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {  // anti-homomorphism
            auto [img, f] = letter_antipode(*it);
            nw.push_back(static_cast<std::uint8_t>(img));
            coeff = coeff * f;
        }
        out.add(nw, coeff);
    }
    return normal_form(out, p);
}

std::vector<Word> normal_monomials(const Presentation& p, int maxDegree) {
    std::vector<Word> out;
    std::size_t maxLhs = 0;
    for (const auto& r : p.rules()) maxLhs = std::max(maxLhs, r.lhs.size());
    auto reducible_tail = [&](const Word& w) {
        for (const auto& r : p.rules()) {
            if (r.lhs.size() > w.size()) continue;
            if (std::equal(r.lhs.begin(), r.lhs.end(), w.end() - r.lhs.size())) return true;
        }
        return false;
    };
    Word current;
    auto rec = [&](auto&& self) -> void {
        if (!current.empty()) out.push_back(current);
        if (current.size() >= static_cast<std::size_t>(maxDegree)) return;
        for (std::size_t l = 0; l < p.alphabet().size(); ++l) {
            current.push_back(static_cast<std::uint8_t>(l));
            if (!reducible_tail(current))
                self(self);
            current.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

namespace {

std::string word_str(const Word& w, const Presentation& p) {
    if (w.empty()) return "1";
    std::string s;
    for (auto l : w) {
        if (!s.empty()) s += " ";
        s += p.alphabet().at(l).name;
    }
    return s;
}

TensorPoly apply_coproduct_to_slot(const TensorPoly& t, int slot, const Presentation& p) {
    TensorPoly out;
    out.arity = t.arity + 1;
    for (const auto& [ws, c] : t.terms) {
        TensorPoly inner = coproduct(NCPoly::word(ws[slot]), p);
        for (const auto& [pair, cw] : inner.terms) {
            std::vector<Word> e;
            e.reserve(ws.size() + 1);
            for (int s = 0; s < static_cast<int>(ws.size()); ++s) {
                if (s == slot) {
                    e.push_back(pair[0]);
                    e.push_back(pair[1]);
                } else {
                    e.push_back(ws[s]);
                }
            }
            out.add(e, c * cw);
        }
    }
    return normalize_tensor(out, p);
}

NCPoly collapse_by_counit(const TensorPoly& t, int slot, const Presentation& p) {
    NCPoly out;
    for (const auto& [ws, c] : t.terms) {
        Laurent eps = counit(NCPoly::word(ws[slot]), p);
        if (eps.isZero()) continue;
        out.add(ws[1 - slot], c * eps);
    }
    return normal_form(out, p);
}

NCPoly multiply_slots_with_antipode(const TensorPoly& t, int antipodeSlot,
                                    const Presentation& p) {
    NCPoly out;
    for (const auto& [ws, c] : t.terms) {
        NCPoly left = NCPoly::word(ws[0]);
        NCPoly right = NCPoly::word(ws[1]);
        if (antipodeSlot == 0)
            left = antipode(left, p);
        else
            right = antipode(right, p);
        out = out + (left * right).scale(c);
    }
    return normal_form(out, p);
}

}  // namespace

HopfReport hopf_axiom_check(int maxDegree) {
    if (maxDegree < 0 || maxDegree > 5)
        throw std::invalid_argument("hopf_axiom_check: degree must be in 0..5");
    Presentation p = su_q2();
    HopfReport report;
    std::vector<Word> monomials = normal_monomials(p, maxDegree);
    monomials.insert(monomials.begin(), Word{});  // the unit
    for (const Word& w : monomials) {
        ++report.monomialsChecked;
        NCPoly m = NCPoly::word(w);
        TensorPoly delta = coproduct(m, p);

        TensorPoly lhs3 = apply_coproduct_to_slot(delta, 0, p);
        TensorPoly rhs3 = apply_coproduct_to_slot(delta, 1, p);
        if (!(lhs3 == rhs3) && report.coassociativity) {
            report.coassociativity = false;
            if (report.firstCounterexample.empty())
                report.firstCounterexample = "coassociativity at " + word_str(w, p);
        }

        NCPoly reducedM = normal_form(m, p);
        if (!(collapse_by_counit(delta, 0, p) == reducedM) && report.counitLeft) {
            report.counitLeft = false;
            if (report.firstCounterexample.empty())
                report.firstCounterexample = "(eps (x) id) Delta at " + word_str(w, p);
        }
        if (!(collapse_by_counit(delta, 1, p) == reducedM) && report.counitRight) {
            report.counitRight = false;
            if (report.firstCounterexample.empty())
                report.firstCounterexample = "(id (x) eps) Delta at " + word_str(w, p);
        }

        NCPoly target = NCPoly::scalar(counit(m, p));
        if (!(multiply_slots_with_antipode(delta, 0, p) == target) && report.antipodeLeft) {
            report.antipodeLeft = false;
            if (report.firstCounterexample.empty())
                report.firstCounterexample = "m(S (x) id) Delta at " + word_str(w, p);
        }
        if (!(multiply_slots_with_antipode(delta, 1, p) == target) && report.antipodeRight) {
            report.antipodeRight = false;
            if (report.firstCounterexample.empty())
                report.firstCounterexample = "m(id (x) S) Delta at " + word_str(w, p);
        }
    }
    return report;
}

NCPoly specialize_q(const NCPoly& poly, const Rational& value, const Presentation&) {
    NCPoly out;
    for (const auto& [w, c] : poly.terms())
        out.add(w, Laurent(c.evaluate(value)));
    return out;
}

bool commutativity_check(const Presentation& p, int maxDegree, const Rational& value) {
    std::vector<Word> monomials = normal_monomials(p, maxDegree);
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t j = i + 1; j < monomials.size(); ++j) {
            NCPoly u = NCPoly::word(monomials[i]);
            NCPoly v = NCPoly::word(monomials[j]);
            NCPoly comm = normal_form(u * v - v * u, p);
            if (!specialize_q(comm, value, p).isZero()) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
    enum Kind { Ident, Number, Star, Caret, Plus, Minus, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) return {Token::End, "", start};
        char c = s_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            Token t{Token::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            if (j < s_.size() && s_[j] == '/') {
                std::size_t k = j + 1;
                while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
                if (k == j + 1) throw ParseError("malformed rational literal", j);
                Token t{Token::Number, s_.substr(i_, k - i_), start};
                i_ = k;
                return t;
            }
            Token t{Token::Number, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '*': return {Token::Star, "*", start};
            case '^': return {Token::Caret, "^", start};
            case '+': return {Token::Plus, "+", start};
            case '-': return {Token::Minus, "-", start};
            case '(': return {Token::LParen, "(", start};
            case ')': return {Token::RParen, ")", start};
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

  private:
    const std::string& s_;
    std::size_t i_ = 0;
};

class Parser {
  public:
    Parser(const std::string& text, const Presentation& p) : lexer_(text), p_(p) { advance(); }

    NCPoly parseExpression() {
        NCPoly out = parseSigned();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            advance();
            NCPoly t = parseTerm();
            out = minus ? out - t : out + t;
        }
        if (tok_.kind != Token::End) throw ParseError("trailing input", tok_.pos);
        return out;
    }

  private:
    NCPoly parseSigned() {
        if (tok_.kind == Token::Minus) {
            advance();
            return NCPoly::zero() - parseTerm();
        }
        return parseTerm();
    }

    NCPoly parseTerm() {
        NCPoly prod = parseFactor();
        while (tok_.kind == Token::Ident || tok_.kind == Token::Number ||
               tok_.kind == Token::LParen)
            prod = prod * parseFactor();
        return prod;
    }

    NCPoly parseFactor() {
        NCPoly base = parsePrimary();
        while (tok_.kind == Token::Caret) {
            advance();
            long expo = parseExponent();
            base = power(base, expo);
        }
        return base;
    }

    long parseExponent() {
        bool neg = false;
        if (tok_.kind == Token::Minus) {
            neg = true;
            advance();
        }
        if (tok_.kind != Token::Number || tok_.text.find('/') != std::string::npos)
            throw ParseError("integer exponent expected", tok_.pos);
        long v = std::stol(tok_.text);
        advance();
        return neg ? -v : v;
    }

    NCPoly power(const NCPoly& base, long expo) {
        if (expo == 0) return NCPoly::unit();
        if (expo < 0) {
            // only pure scalars are invertible here
            if (base.terms().size() != 1 || !base.terms().begin()->first.empty())
                throw ParseError("negative power of a non-scalar", tok_.pos);
            const Laurent& c = base.terms().begin()->second;
            if (c.terms().size() != 1)
                throw ParseError("negative power of a non-monomial scalar", tok_.pos);
            auto [qpow, coeff] = *c.terms().begin();
            Laurent inv = Laurent::monomial(-qpow, GaussianRational(1) / coeff);
            NCPoly out = NCPoly::scalar(inv);
            for (long k = 1; k < -expo; ++k)
                out = out * NCPoly::scalar(inv);
            return out;
        }
        NCPoly out = base;
        for (long k = 1; k < expo; ++k) out = out * base;
        return out;
    }

    NCPoly parsePrimary() {
        if (tok_.kind == Token::Number) {
            std::string text = tok_.text;
            advance();
            Rational r(text);
            r.canonicalize();
            return NCPoly::scalar(Laurent(GaussianRational(r)));
        }
        if (tok_.kind == Token::LParen) {
            std::size_t open = tok_.pos;
            advance();
            NCPoly inner = parseSignedExpressionUntilParen(open);
            return inner;
        }
        if (tok_.kind == Token::Ident) {
            std::string name = tok_.text;
            std::size_t pos = tok_.pos;
            advance();
            if (tok_.kind == Token::Star) {
                advance();
                name += "*";
            }
            if (name == "q") return NCPoly::scalar(Laurent::monomial(1));
            int idx = p_.letterIndex(name);
            if (idx < 0) throw ParseError("unknown generator '" + name + "'", pos);
            return NCPoly::word({static_cast<std::uint8_t>(idx)});
        }
        throw ParseError("expected a factor", tok_.pos);
    }

    NCPoly parseSignedExpressionUntilParen(std::size_t open) {
        NCPoly out = parseSigned();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            advance();
            NCPoly t = parseTerm();
            out = minus ? out - t : out + t;
        }
        if (tok_.kind != Token::RParen) throw ParseError("unbalanced parenthesis", open);
        advance();
        return out;
    }

    void advance() { tok_ = lexer_.next(); }

    Lexer lexer_;
    const Presentation& p_;
    Token tok_{Token::End, "", 0};
};

}  // namespace

NCPoly parse(const std::string& text, const Presentation& p) {
    Parser parser(text, p);
    return parser.parseExpression();
}

}  // namespace ncg::hopf
