// Sparse multivariate polynomials over GF(2^m).
//
// Used only by the tightness checker, which multiplies out products of
// arrows-with-undetermined-corrections and asks whether the result equals a
// single monomial identically in the correction variables.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gqa/field.hpp"

namespace gqa {

// Exponent vector, trailing zeros trimmed.
using Expo = std::vector<uint16_t>;

class MPoly {
  public:
    MPoly() = default;

    static MPoly constant(Fq c) {
        MPoly p;
        if (!c.is_zero()) p.t_[Expo{}] = c;
        return p;
    }
    static MPoly variable(size_t idx, Fq one) {
        MPoly p;
        Expo e(idx + 1, 0);
        e[idx] = 1;
        p.t_[std::move(e)] = one;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second.is_one();
    }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    Fq constant_term() const {
        auto it = t_.find(Expo{});
        return it == t_.end() ? Fq() : it->second;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r(a);
        for (const auto& [e, c] : b.t_) r.add(e, c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [e1, c1] : a.t_)
            for (const auto& [e2, c2] : b.t_) {
                Expo e(std::max(e1.size(), e2.size()), 0);
                for (size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
                for (size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
                r.add(e, c1 * c2);
            }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : t_) {
            if (!s.empty()) s += "+";
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += "y" + std::to_string(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) s += c.str();
            else s += (c.is_one() ? mono : c.str() + "*" + mono);
        }
        return s;
    }

  private:
    void add(Expo e, Fq c) {
        while (!e.empty() && e.back() == 0) e.pop_back();
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::map<Expo, Fq> t_;
};

inline MPoly operator*(const MPoly& a, Fq c) { return a * MPoly::constant(c); }

}  // namespace gqa
