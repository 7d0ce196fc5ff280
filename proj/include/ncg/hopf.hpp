#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncg/scalars.hpp"

namespace ncg::hopf {

/// Laurent polynomial in the formal parameter q, exact coefficients.
class Laurent {
  public:
    Laurent() = default;
    Laurent(GaussianRational c) {  // NOLINT(google-explicit-constructor)
        if (!c.isZero()) c_[0] = std::move(c);
    }
    static Laurent monomial(int power, GaussianRational c = GaussianRational(1));

    bool isZero() const { return c_.empty(); }
    const std::map<int, GaussianRational>& terms() const { return c_; }

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator*(const Laurent& o) const;
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    /// Complex conjugation of the coefficients (q itself is real/formal).
    Laurent conj() const;

    GaussianRational evaluate(const Rational& q) const;

    std::string str() const;

  private:
    std::map<int, GaussianRational> c_;
};

using Word = std::vector<std::uint8_t>;  // letter indices into the alphabet

struct Letter {
    std::string name;
    int weight = 1;   // termination-order weight
    int star = -1;    // index of the starred partner (-1: none)
};

/// Presented *-algebra with an oriented, terminating rewrite system. Order on
/// words: total letter weight, then length, then lex by alphabet position.
/// Every rule's right side must be strictly smaller than its left word; this
/// is checked at construction (termination certificate).
class Presentation;

/// Degree-lexicographic word order (term-storage order; the termination
/// order additionally weights letters, see Presentation::wordLess).
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Noncommutative polynomial: words over the alphabet with Laurent
/// coefficients, no zero terms, canonical degree-lex term map.
class NCPoly {
  public:
    using Terms = std::map<Word, Laurent, DegLexLess>;

    NCPoly() = default;

    static NCPoly zero() { return {}; }
    static NCPoly unit() { return scalar(Laurent(GaussianRational(1))); }
    static NCPoly scalar(const Laurent& c);
    static NCPoly word(const Word& w, const Laurent& c = Laurent(GaussianRational(1)));

    bool isZero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add(const Word& w, const Laurent& c);

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;  // concatenation product
    NCPoly scale(const Laurent& c) const;
    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

  private:
    Terms terms_;
};

class Presentation {
  public:
    struct Rule {
        Word lhs;
        NCPoly rhs;
    };

    Presentation(std::vector<Letter> alphabet, std::vector<Rule> rules, std::string name = {});

    const std::vector<Letter>& alphabet() const { return alphabet_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::string& name() const { return name_; }

    int letterIndex(const std::string& name) const;  // -1 if unknown

    /// Weighted-deglex comparison: true if a < b.
    bool wordLess(const Word& a, const Word& b) const;

    int weight(const Word& w) const;

  private:
    std::vector<Letter> alphabet_;
    std::vector<Rule> rules_;
    std::string name_;
};

/// Woronowicz SU_q(2) generators a, a*, g, g* with the five defining
/// relations oriented into a complete rewrite system.
Presentation su_q2();

/// SL_q(2) coordinate algebra on a, b, c, d.
Presentation sl_q2();

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg), position(pos) {}
};

/// Grammar: identifiers (alphabet letters), postfix '*', '^' integer powers,
/// 'q' / 'q^-1' scalars, integer and p/q rational literals, + - ( ),
/// juxtaposition as product.
NCPoly parse(const std::string& text, const Presentation& p);

struct NonterminationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Strategy { LeftmostFirstRule, RightmostLastRule };

NCPoly normal_form(const NCPoly& poly, const Presentation& p,
                   Strategy strategy = Strategy::LeftmostFirstRule);

/// Star involution: reverse words, star letters, conjugate coefficients.
NCPoly star(const NCPoly& poly, const Presentation& p);

/// k-fold tensor polynomial: tuples of words with Laurent coefficients,
/// componentwise product, slotwise reduction.
struct TensorPoly {
    int arity = 2;
    std::map<std::vector<Word>, Laurent> terms;

    void add(const std::vector<Word>& w, const Laurent& c);
    TensorPoly multiply(const TensorPoly& o, const Presentation& p) const;
    bool operator==(const TensorPoly& o) const = default;
};

/// Coproduct/counit/antipode of A_q = su_q2 (algebra maps on generators,
/// extended (anti)multiplicatively; outputs slotwise normal-formed).
TensorPoly coproduct(const NCPoly& poly, const Presentation& p);
Laurent counit(const NCPoly& poly, const Presentation& p);
NCPoly antipode(const NCPoly& poly, const Presentation& p);

struct HopfReport {
    bool coassociativity = true;
    bool counitLeft = true;
    bool counitRight = true;
    bool antipodeLeft = true;
    bool antipodeRight = true;
    int monomialsChecked = 0;
    std::string firstCounterexample;

    bool allPass() const {
        return coassociativity && counitLeft && counitRight && antipodeLeft && antipodeRight;
    }
};

/// Verifies the five Hopf-axiom families on every normal-form monomial of
/// degree <= maxDegree, as exact Laurent identities.
HopfReport hopf_axiom_check(int maxDegree);

/// Specialise q := value in every coefficient.
NCPoly specialize_q(const NCPoly& poly, const Rational& value, const Presentation& p);

/// normal_form(uv - vu) == 0 for all normal monomial pairs up to degree D
/// after specialising q := value.
bool commutativity_check(const Presentation& p, int maxDegree, const Rational& value);

/// All normal-form monomials (as words) of degree 1..maxDegree.
std::vector<Word> normal_monomials(const Presentation& p, int maxDegree);

}  // namespace ncg::hopf
