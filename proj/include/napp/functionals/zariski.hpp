#pragma once

#include "napp/functionals/energy.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

// Exact negative semidefiniteness by symmetric elimination with diagonal pivoting.
inline bool is_negative_semidefinite(QMat M)
{
    const std::size_t n = M.size();
    for (const auto& row : M)
        if (row.size() != n)
            throw std::invalid_argument("matrix is not square");
    std::vector<bool> alive(n, true);
    for (;;) {
        // A zero diagonal entry forces its row to vanish.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (!alive[i] || M[i][i] != 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (alive[j] && j != i && M[i][j] != 0)
                        return false;
                alive[i] = false;
                changed = true;
            }
        }
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i]) {
                if (M[i][i] > 0)
                    return false;
                if (p == n || M[i][i] < M[p][p])
                    p = i;
            }
        if (p == n)
            return true;
        alive[p] = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i] || M[i][p] == 0)
                continue;
            Rational f = M[i][p] / M[p][p];
            for (std::size_t j = 0; j < n; ++j)
                if (alive[j])
                    M[i][j] -= f * M[p][j];
        }
    }
}

// Every principal minor of -B is nonnegative.
inline bool nsd_by_principal_minors(const QMat& B)
{
    const std::size_t n = B.size();
    if (n > 20)
        throw std::invalid_argument("principal-minor test limited to 20 x 20");
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        QMat sub;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1ul << i)))
                continue;
            QVec row;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1ul << j))
                    row.push_back(-B[i][j]);
            sub.push_back(row);
        }
        if (det(sub) < 0)
            return false;
    }
    return true;
}

// Verdict of the Zariski-type lemma: B symmetric with nonnegative off-diagonal
// entries and a strictly positive kernel vector is negative semidefinite.
inline bool bilinear_nsd_check(const QMat& B, const QVec& kernel)
{
    const std::size_t n = B.size();
    if (kernel.size() != n)
        throw std::invalid_argument("hypothesis failed: kernel vector has the wrong length");
    for (std::size_t i = 0; i < n; ++i) {
        if (B[i].size() != n)
            throw std::invalid_argument("hypothesis failed: matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (B[i][j] != B[j][i])
                throw std::invalid_argument("hypothesis failed: matrix is not symmetric");
            if (i != j && B[i][j] < 0)
                throw std::invalid_argument("hypothesis failed: negative off-diagonal entry");
        }
    }
    for (const auto& k : kernel)
        if (k <= 0)
            throw std::invalid_argument("hypothesis failed: kernel vector is not strictly positive");
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j)
            s += B[i][j] * kernel[j];
        if (s != 0)
            throw std::invalid_argument("hypothesis failed: B times the kernel vector is not zero");
    }
    return n <= 12 ? nsd_by_principal_minors(B) : is_negative_semidefinite(B);
}

struct ZariskiGram {
    QMat matrix;
    bool is_nsd;
};

// G_ij = (0, psi_i)(0, psi_j) . Gamma
inline ZariskiGram zariski_gram(int n, const std::vector<PLFunction>& basis, const std::vector<PairingSlot>& gamma,
                                IntersectMode mode = IntersectMode::recursion)
{
    if (static_cast<int>(gamma.size()) != n - 1)
        throw std::invalid_argument("Gamma needs n - 1 slots, got " + std::to_string(gamma.size()));
    std::vector<PLFunction> fs = basis;
    for (const auto& g : gamma)
        fs.push_back(g.phi);
    auto tc = common_testconfig(n, fs);
    std::vector<ToricClass> gcls;
    for (const auto& g : gamma)
        gcls.push_back(class_of(tc, g.beta, g.phi));
    std::vector<ToricClass> bcls;
    for (const auto& b : basis)
        bcls.push_back(class_of(tc, 0, b));
    const std::size_t k = basis.size();
    QMat G(k, QVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            std::vector<ToricClass> cls{bcls[i], bcls[j]};
            cls.insert(cls.end(), gcls.begin(), gcls.end());
            G[i][j] = G[j][i] = intersection_number(cls, tc, mode);
        }
    return ZariskiGram{G, is_negative_semidefinite(G)};
}

// The Gram matrix on the vertical divisors E_i of tc against Gamma, with the
// kernel vector (b_i); the input of bilinear_nsd_check.
inline std::pair<QMat, QVec> vertical_gram(const ToricTestConfig& tc, const std::vector<ToricClass>& gamma,
                                           IntersectMode mode = IntersectMode::recursion)
{
    auto vr = tc.vertical_rays();
    const std::size_t k = vr.size();
    QMat G(k, QVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            // E_i E_j = 0 unless the two rays span a cone.
            bool adjacent = i == j;
            for (const auto& cone : tc.fan.cones)
                adjacent |= std::binary_search(cone.begin(), cone.end(), vr[i]) &&
                            std::binary_search(cone.begin(), cone.end(), vr[j]);
            if (!adjacent)
                continue;
            std::vector<ToricClass> cls{ray_class(tc, vr[i]), ray_class(tc, vr[j])};
            cls.insert(cls.end(), gamma.begin(), gamma.end());
            G[i][j] = G[j][i] = intersection_number(cls, tc, mode);
        }
    QVec b;
    for (int r : vr)
        b.emplace_back(static_cast<long>(tc.b[r]));
    return {G, b};
}

} // namespace napp
