#include "bendkz/braids.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bendkz::braids {

Word::Word(int n, const std::vector<Letter>& raw) : n_(n) {
    for (const Letter& l : raw) {
        if (l.gen < 1 || l.gen > n_) throw std::invalid_argument("Word: index out of range");
        if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("Word: exponent must be +-1");
        push_reduced(l);
    }
}

void Word::push_reduced(Letter l) {
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
        letters_.pop_back();
    else
        letters_.push_back(l);
}

Word Word::generator(int n, int gen, int exp) {
    return Word(n, {Letter{gen, exp}});
}

Word Word::full_product(int n) {
    std::vector<Letter> ls;
    for (int k = 1; k <= n; ++k) ls.push_back({k, 1});
    return Word(n, ls);
}

Word Word::inverse() const {
    Word w(n_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->exp});
    return w;
}

Word operator*(const Word& a, const Word& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Word: rank mismatch");
    Word w = a;
    for (const Letter& l : b.letters_) w.push_reduced(l);
    return w;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << " ";
        os << "x" << letters_[i].gen;
        if (letters_[i].exp < 0) os << "^-1";
    }
    return os.str();
}

Word word_reduce(int n, const std::vector<Letter>& raw) { return Word(n, raw); }

Word artin_act(int k, int sign, const Word& w) {
    const int n = w.rank();
    if (n < 2 || k < 1 || k >= n) throw std::invalid_argument("artin_act: index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("artin_act: sign must be +-1");
    std::vector<Letter> out;
    out.reserve(w.letters().size() * 3);
    auto emit = [&out](int gen, int exp) { out.push_back({gen, exp}); };
    for (const Letter& l : w.letters()) {
        if (l.gen != k && l.gen != k + 1) {
            emit(l.gen, l.exp);
            continue;
        }
        if (sign == 1) {
            if (l.gen == k) {
                // x_k -> x_k x_{k+1} x_k^-1
                if (l.exp == 1) {
                    emit(k, 1);
                    emit(k + 1, 1);
                    emit(k, -1);
                } else {
                    emit(k, 1);
                    emit(k + 1, -1);
                    emit(k, -1);
                }
            } else {
                emit(k, l.exp); // x_{k+1} -> x_k
            }
        } else {
            if (l.gen == k) {
                emit(k + 1, l.exp); // x_k -> x_{k+1}
            } else {
                // x_{k+1} -> x_{k+1}^-1 x_k x_{k+1}
                if (l.exp == 1) {
                    emit(k + 1, -1);
                    emit(k, 1);
                    emit(k + 1, 1);
                } else {
                    emit(k + 1, -1);
                    emit(k, -1);
                    emit(k + 1, 1);
                }
            }
        }
    }
    return Word(n, out);
}

Word braid_act(const Braid& b, const Word& w) {
    if (b.n != w.rank()) throw std::invalid_argument("braid_act: rank mismatch");
    Word cur = w;
    for (const Letter& l : b.letters) cur = artin_act(l.gen, l.exp, cur);
    return cur;
}

Braid Braid::inverse() const {
    Braid b{n, {}};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        b.letters.push_back({it->gen, -it->exp});
    return b;
}

Braid operator*(const Braid& a, const Braid& b) {
    if (a.n != b.n) throw std::invalid_argument("Braid: strand count mismatch");
    Braid c{a.n, a.letters};
    c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
    return c;
}

std::string Braid::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << " ";
        os << "s" << letters[i].gen;
        if (letters[i].exp < 0) os << "^-1";
    }
    return os.str();
}

Braid pure_braid_generator(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pure_braid_generator: need 1 <= i < j <= n");
    Braid b{n, {}};
    for (int k = j - 1; k >= i + 1; --k) b.letters.push_back({k, 1});
    b.letters.push_back({i, 1});
    b.letters.push_back({i, 1});
    for (int k = i + 1; k <= j - 1; ++k) b.letters.push_back({k, -1});
    return b;
}

std::vector<std::pair<int, int>> generator_pairs(int n) {
    std::vector<std::pair<int, int>> ps;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) ps.emplace_back(i, j);
    return ps;
}

bool is_pure(const Braid& b) {
    std::vector<int> perm(static_cast<std::size_t>(b.n));
    std::iota(perm.begin(), perm.end(), 0);
    for (const Letter& l : b.letters) {
        if (l.gen < 1 || l.gen >= b.n) throw std::invalid_argument("is_pure: index out of range");
        std::swap(perm[static_cast<std::size_t>(l.gen - 1)], perm[static_cast<std::size_t>(l.gen)]);
    }
    for (std::size_t k = 0; k < perm.size(); ++k)
        if (perm[k] != static_cast<int>(k)) return false;
    return true;
}

std::vector<long long> abelianize(const Word& w) {
    std::vector<long long> v(static_cast<std::size_t>(w.rank()), 0);
    for (const Letter& l : w.letters()) v[static_cast<std::size_t>(l.gen - 1)] += l.exp;
    return v;
}

cplx char_eval(const Character& chi, const Word& w) {
    if (chi.n != w.rank()) throw std::invalid_argument("char_eval: rank mismatch");
    cplx v{1.0, 0.0};
    for (std::size_t k = 0; k < chi.values.size(); ++k) {
        if (chi.values[k] == cplx{0.0, 0.0})
            throw std::invalid_argument("char_eval: character value is zero");
    }
    auto ab = abelianize(w);
    for (std::size_t k = 0; k < ab.size(); ++k) {
        long long e = ab[k];
        cplx base = chi.values[k];
        bool inv = e < 0;
        unsigned long long m = inv ? static_cast<unsigned long long>(-e)
                                   : static_cast<unsigned long long>(e);
        cplx acc{1.0, 0.0};
        cplx b = base;
        while (m) {
            if (m & 1ull) acc *= b;
            b *= b;
            m >>= 1ull;
        }
        v *= inv ? cplx{1.0, 0.0} / acc : acc;
    }
    return v;
}

bool Character::admissible() const {
    for (const cplx& v : values) {
        if (v == cplx{0.0, 0.0}) return false;
        if (std::abs(v - cplx{1.0, 0.0}) < 1e-14) return false;
    }
    return true;
}

Braid mirror(const Braid& b) {
    Braid m{b.n, {}};
    for (const Letter& l : b.letters) m.letters.push_back({b.n - l.gen, l.exp});
    return m;
}

Braid parse_braid(int n, const std::string& text) {
    Braid b{n, {}};
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        int exp = 1;
        auto caret = tok.find('^');
        std::string head = tok;
        if (caret != std::string::npos) {
            head = tok.substr(0, caret);
            exp = std::stoi(tok.substr(caret + 1));
        }
        if (head.size() >= 2 && head[0] == 's') {
            int k = std::stoi(head.substr(1));
            if (k < 1 || k >= n) throw std::invalid_argument("parse_braid: Artin index out of range");
            int reps = std::abs(exp);
            int sg = exp >= 0 ? 1 : -1;
            for (int r = 0; r < reps; ++r) b.letters.push_back({k, sg});
        } else if (head.size() >= 4 && head[0] == 'A' && head[1] == '(') {
            auto close = head.find(')');
            if (close == std::string::npos) throw std::invalid_argument("parse_braid: malformed A(i,j)");
            auto comma = head.find(',');
            int i = std::stoi(head.substr(2, comma - 2));
            int j = std::stoi(head.substr(comma + 1, close - comma - 1));
            Braid a = pure_braid_generator(i, j, n);
            if (exp < 0) a = a.inverse();
            for (int r = 0; r < std::abs(exp); ++r)
                b.letters.insert(b.letters.end(), a.letters.begin(), a.letters.end());
        } else {
            throw std::invalid_argument("parse_braid: unknown token '" + tok + "'");
        }
    }
    return b;
}

} // namespace bendkz::braids
