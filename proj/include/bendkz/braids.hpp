#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace bendkz::braids {

using cplx = std::complex<double>;

/// One letter of a word: generator index (1-based) and exponent +1/-1.
struct Letter {
    int gen;
    int exp;
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group F_n.
class Word {
public:
    explicit Word(int n) : n_(n) {}
    Word(int n, const std::vector<Letter>& raw); // reduces

    static Word generator(int n, int gen, int exp = 1);
    /// x_1 x_2 ... x_n, the product of all generators.
    static Word full_product(int n);

    int rank() const { return n_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

    std::string str() const; // e.g. "x1 x2^-1"

private:
    void push_reduced(Letter l);
    int n_;
    std::vector<Letter> letters_;
};

/// Braid on n strands as a sequence of Artin letters (index 1..n-1).
struct Braid {
    int n;
    std::vector<Letter> letters;

    Braid inverse() const;
    friend Braid operator*(const Braid& a, const Braid& b);
    friend bool operator==(const Braid&, const Braid&) = default;
    std::string str() const; // e.g. "s1 s2^-1"
};

/// Character chi of F_n: nonzero values chi(gamma_1)..chi(gamma_n).
struct Character {
    int n;
    std::vector<cplx> values;
    /// True when every value is nonzero and != 1.
    bool admissible() const;
};

Word word_reduce(int n, const std::vector<Letter>& raw);

/// Image of w under the generator substitution sigma-bar_k^sign:
/// for sign=+1, x_k -> x_k x_{k+1} x_k^{-1}, x_{k+1} -> x_k; sign=-1 inverts.
Word artin_act(int k, int sign, const Word& w);

/// sigma-bar(b)(w), applying the letters of b first-to-last so that
/// braid_act(b1*b2, w) = braid_act(b2, braid_act(b1, w)); this is the
/// composition order under which the Gassner matrix map is a homomorphism.
Word braid_act(const Braid& b, const Word& w);

/// Band generator A_ij = (s_{j-1}...s_{i+1}) s_i^2 (s_{i+1}^-1...s_{j-1}^-1).
Braid pure_braid_generator(int i, int j, int n);

/// All A_ij for 1 <= i < j <= n in lexicographic order.
std::vector<std::pair<int, int>> generator_pairs(int n);

bool is_pure(const Braid& b);

/// Exponent-sum vector of w in Z^n.
std::vector<long long> abelianize(const Word& w);

cplx char_eval(const Character& chi, const Word& w);

/// Relabel s_k -> s_{n-k}; an automorphism of the braid group.
Braid mirror(const Braid& b);

/// Parse "s1 s2^-1 A(1,3)" style braid words.
Braid parse_braid(int n, const std::string& text);

} // namespace bendkz::braids
