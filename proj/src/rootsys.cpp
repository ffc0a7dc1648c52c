#include "kflag/rootsys.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>

namespace kflag {

long RootSystem::classical_order(char family, int rank) {
    auto fact = [](int n) {
        long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (family) {
        case 'A':
            if (rank < 1) return -1;
            return fact(rank + 1);
        case 'B':
        case 'C':
            if (rank < 2) return -1;
            return (1L << rank) * fact(rank);
        case 'D':
            if (rank < 4) return -1;
            return (1L << (rank - 1)) * fact(rank);
        case 'E':
            if (rank == 6) return 51840L;
            if (rank == 7) return 2903040L;
            if (rank == 8) return 696729600L;
            return -1;
        case 'F':
            return rank == 4 ? 1152L : -1;
        case 'G':
            return rank == 2 ? 12L : -1;
        default:
            return -1;
    }
}

RootSystem::RootSystem(char family, int rank, long max_order)
    : family_(family), rank_(rank) {
    long order = classical_order(family, rank);
    if (order < 0)
        throw UnsupportedType(std::string("unsupported Cartan type ") + family +
                              std::to_string(rank));
    if (order > max_order)
        throw UnsupportedType("Weyl group order " + std::to_string(order) +
                              " exceeds bound " + std::to_string(max_order));
    build_cartan();
    build_roots();
    enumerate_group(order);
    compute_words();
}

void RootSystem::build_cartan() {
    const int r = rank_;
    cartan_.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) cartan_[i][i] = 2;
    auto bond = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
    switch (family_) {
        case 'A':
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            break;
        case 'B':
            // α_r short: ⟨α_{r-1}, α_r^∨⟩ = -2
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            cartan_[r - 1][r - 2] = -2;
            break;
        case 'C':
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            cartan_[r - 2][r - 1] = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < r; ++i) bond(i, i + 1);
            bond(r - 3, r - 1);
            break;
        case 'E':
            // Bourbaki numbering: node 2 attaches to node 4
            bond(0, 2);
            bond(2, 3);
            bond(1, 3);
            for (int i = 3; i + 1 < r; ++i) bond(i, i + 1);
            break;
        case 'F':
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
            cartan_[2][1] = -2;  // α_3, α_4 short
            break;
        case 'G':
            cartan_[0][1] = -3;  // α_1 short
            cartan_[1][0] = -1;
            break;
    }
}

std::vector<int> RootSystem::mat_mul(const std::vector<int>& a,
                                     const std::vector<int>& b) const {
    const int r = rank_;
    std::vector<int> c(r * r, 0);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            int aik = a[i * r + k];
            if (aik == 0) continue;
            for (int j = 0; j < r; ++j) c[i * r + j] += aik * b[k * r + j];
        }
    return c;
}

Weight RootSystem::mat_act(const std::vector<int>& m, const Weight& lambda) const {
    const int r = rank_;
    Weight out(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out[i] += m[i * r + j] * lambda[j];
    return out;
}

Weight RootSystem::simple_root(int i) const {
    Weight a(rank_);
    for (int k = 0; k < rank_; ++k) a[k] = cartan_[k][i - 1];
    return a;
}

void RootSystem::build_roots() {
    const int r = rank_;
    // simple reflection matrices
    std::vector<std::vector<int>> refl(r, std::vector<int>(r * r, 0));
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < r; ++j)
                refl[i][k * r + j] = (k == j ? 1 : 0) - (j == i ? cartan_[k][i] : 0);
    }

    struct Pending {
        std::vector<int> simple_coeffs;
        Weight weight;
        std::vector<int> refl_mat;
    };
    std::map<std::vector<int>, int> seen;  // simple_coeffs of positive rep
    std::deque<Pending> queue;
    std::vector<Pending> found;
    for (int i = 0; i < r; ++i) {
        Pending p;
        p.simple_coeffs.assign(r, 0);
        p.simple_coeffs[i] = 1;
        p.weight = simple_root(i + 1);
        p.refl_mat = refl[i];
        seen.emplace(p.simple_coeffs, static_cast<int>(found.size()));
        found.push_back(p);
        queue.push_back(std::move(p));
    }
    while (!queue.empty()) {
        Pending p = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            // s_i(β): simple coeffs change by the i-th fundamental coord of β
            std::vector<int> sc = p.simple_coeffs;
            sc[i] -= p.weight[i];
            bool neg = std::all_of(sc.begin(), sc.end(), [](int x) { return x <= 0; });
            std::vector<int> rep = sc;
            if (neg)
                for (int& x : rep) x = -x;
            if (seen.count(rep)) continue;
            Pending q;
            q.simple_coeffs = rep;
            Weight w = mat_act(refl[i], p.weight);
            if (neg)
                for (int& x : w) x = -x;
            q.weight = std::move(w);
            q.refl_mat = mat_mul(mat_mul(refl[i], p.refl_mat), refl[i]);
            seen.emplace(rep, static_cast<int>(found.size()));
            found.push_back(q);
            queue.push_back(std::move(q));
        }
    }
    // sort by (height, simple_coeffs) for a stable canonical order
    std::sort(found.begin(), found.end(), [](const Pending& a, const Pending& b) {
        int ha = std::accumulate(a.simple_coeffs.begin(), a.simple_coeffs.end(), 0);
        int hb = std::accumulate(b.simple_coeffs.begin(), b.simple_coeffs.end(), 0);
        if (ha != hb) return ha < hb;
        return a.simple_coeffs < b.simple_coeffs;
    });
    for (const auto& p : found) {
        Root root;
        root.simple_coeffs = p.simple_coeffs;
        root.weight_coords = p.weight;
        root.height = std::accumulate(p.simple_coeffs.begin(), p.simple_coeffs.end(), 0);
        root.reflection = -1;  // filled after group enumeration
        int idx = static_cast<int>(pos_roots_.size());
        root_index_.emplace(root.weight_coords, std::make_pair(idx, 1));
        Weight negw = root.weight_coords;
        for (int& x : negw) x = -x;
        root_index_.emplace(std::move(negw), std::make_pair(idx, -1));
        pos_roots_.push_back(std::move(root));
    }
    // stash reflection matrices for enumerate_group to resolve
    refl_mats_.clear();
    refl_mats_.resize(pos_roots_.size());
    for (const auto& p : found) {
        int h = std::accumulate(p.simple_coeffs.begin(), p.simple_coeffs.end(), 0);
        (void)h;
        auto it = root_index_.find(p.weight);
        refl_mats_[it->second.first] = p.refl_mat;
    }
}

std::pair<int, int> RootSystem::root_of_weight(const Weight& mu) const {
    auto it = root_index_.find(mu);
    if (it == root_index_.end()) return {-1, 0};
    return it->second;
}

bool RootSystem::weight_is_negative_root(const Weight& mu) const {
    auto [idx, sign] = root_of_weight(mu);
    return idx >= 0 && sign < 0;
}

int RootSystem::height_pairing(const Weight& mu) const {
    // μ = Σ m_j α_j with the α_j the columns of the Cartan matrix; ⟨μ,ρ̌⟩
    // is Σ m_j, computed exactly by Cramer's rule and asserted integral
    const int r = rank_;
    auto det = [&](const std::vector<std::vector<long long>>& m0) {
        std::vector<std::vector<boost::multiprecision::cpp_rational>> m(r);
        for (int i = 0; i < r; ++i) m[i].assign(m0[i].begin(), m0[i].end());
        boost::multiprecision::cpp_rational d = 1;
        for (int col = 0; col < r; ++col) {
            int piv = -1;
            for (int row = col; row < r; ++row)
                if (m[row][col] != 0) { piv = row; break; }
            if (piv < 0) return boost::multiprecision::cpp_rational(0);
            if (piv != col) { std::swap(m[piv], m[col]); d = -d; }
            d *= m[col][col];
            for (int row = col + 1; row < r; ++row) {
                boost::multiprecision::cpp_rational f = m[row][col] / m[col][col];
                for (int j = col; j < r; ++j) m[row][j] -= f * m[col][j];
            }
        }
        return d;
    };
    std::vector<std::vector<long long>> base(r, std::vector<long long>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) base[i][j] = cartan_[i][j];
    auto d0 = det(base);
    boost::multiprecision::cpp_rational total = 0;
    for (int j = 0; j < r; ++j) {
        auto m = base;
        for (int i = 0; i < r; ++i) m[i][j] = mu[i];
        boost::multiprecision::cpp_rational mj = det(m) / d0;
        if (denominator(mj) != 1)
            throw UnsupportedType("height_pairing: weight is not in the root lattice");
        total += mj;
    }
    return static_cast<int>(numerator(total));
}

int RootSystem::root_height(const Weight& mu) const {
    auto [idx, sign] = root_of_weight(mu);
    if (idx < 0) throw UnsupportedType("root_height: weight is not a root");
    return sign * pos_roots_[idx].height;
}

void RootSystem::enumerate_group(long expected_order) {
    const int r = rank_;
    std::vector<int> id(r * r, 0);
    for (int i = 0; i < r; ++i) id[i * r + i] = 1;

    std::vector<std::vector<int>> gen(r);
    for (int i = 0; i < r; ++i) {
        gen[i].assign(r * r, 0);
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < r; ++j)
                gen[i][k * r + j] = (k == j ? 1 : 0) - (j == i ? cartan_[k][i] : 0);
    }

    elements_.clear();
    elem_index_.clear();
    std::deque<int> queue;
    auto add = [&](std::vector<int> mat) {
        auto it = elem_index_.find(mat);
        if (it != elem_index_.end()) return it->second;
        int idx = static_cast<int>(elements_.size());
        WeylElem e;
        e.matrix = std::move(mat);
        elem_index_.emplace(e.matrix, idx);
        elements_.push_back(std::move(e));
        queue.push_back(idx);
        return idx;
    };
    add(id);
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            std::vector<int> m = mat_mul(gen[i], elements_[w].matrix);
            add(std::move(m));
        }
    }
    if (static_cast<long>(elements_.size()) != expected_order)
        throw std::logic_error("Weyl group enumeration size mismatch");

    // lengths by inversion count, left/right multiplication tables, inverses
    const int n = order();
    for (int w = 0; w < n; ++w) {
        WeylElem& e = elements_[w];
        int inv = 0;
        for (const Root& b : pos_roots_)
            if (weight_is_negative_root(mat_act(e.matrix, b.weight_coords))) ++inv;
        e.length = inv;
        e.left.resize(r);
        e.right.resize(r);
    }
    for (int w = 0; w < n; ++w) {
        WeylElem& e = elements_[w];
        for (int i = 0; i < r; ++i) {
            e.left[i] = elem_index_.at(mat_mul(gen[i], e.matrix));
            e.right[i] = elem_index_.at(mat_mul(e.matrix, gen[i]));
        }
        // inverse of an orthogonal-over-Z action: search via transpose is
        // unsound in this basis, so invert by solving with the word later;
        // for now locate by matrix product scan below.
        e.inverse = -1;
    }
    for (int w = 0; w < n; ++w) {
        if (elements_[w].inverse >= 0) continue;
        for (int v = 0; v < n; ++v) {
            if (elements_[v].length != elements_[w].length) continue;
            if (mat_mul(elements_[w].matrix, elements_[v].matrix) == id) {
                elements_[w].inverse = v;
                elements_[v].inverse = w;
                break;
            }
        }
    }
    // longest element
    w0_ = 0;
    for (int w = 0; w < n; ++w)
        if (elements_[w].length > elements_[w0_].length) w0_ = w;

    // resolve reflection indices for positive roots
    for (std::size_t b = 0; b < pos_roots_.size(); ++b)
        pos_roots_[b].reflection = elem_index_.at(refl_mats_[b]);
    refl_mats_.clear();
    refl_mats_.shrink_to_fit();
}

void RootSystem::compute_words() {
    const int n = order();
    // process by increasing length; smallest left descent rule
    std::vector<int> by_len(n);
    for (int w = 0; w < n; ++w) by_len[w] = w;
    std::stable_sort(by_len.begin(), by_len.end(), [&](int a, int b) {
        return elements_[a].length < elements_[b].length;
    });
    for (int w : by_len) {
        WeylElem& e = elements_[w];
        if (e.length == 0) continue;
        for (int i = 1; i <= rank_; ++i) {
            int sw = left_mul(i, w);
            if (elements_[sw].length < e.length) {
                e.word.reserve(e.length);
                e.word.push_back(i);
                const auto& rest = elements_[sw].word;
                e.word.insert(e.word.end(), rest.begin(), rest.end());
                break;
            }
        }
        assert(static_cast<int>(e.word.size()) == e.length);
    }
}

int RootSystem::mul(int v, int w) const {
    return elem_index_.at(mat_mul(elements_[v].matrix, elements_[w].matrix));
}

Weight RootSystem::act(int w, const Weight& lambda) const {
    return mat_act(elements_[w].matrix, lambda);
}

int RootSystem::element_from_word(const std::vector<int>& word) const {
    int w = identity();
    for (int i : word) {
        if (i < 1 || i > rank_) throw UnsupportedType("bad simple-reflection index");
        w = right_mul(w, i);
    }
    return w;
}

int RootSystem::element_index(const std::vector<int>& matrix) const {
    auto it = elem_index_.find(matrix);
    if (it == elem_index_.end()) throw std::logic_error("matrix not in Weyl group");
    return it->second;
}

bool RootSystem::bruhat_leq(int v, int w) const {
    while (true) {
        if (elements_[w].length == 0) return v == identity();
        int i = elements_[w].word[0];  // s_i w < w
        int sv = left_mul(i, v);
        if (elements_[sv].length < elements_[v].length) v = sv;
        w = left_mul(i, w);
    }
}

std::vector<int> RootSystem::reflections_leq(int w) const {
    std::vector<int> out;
    for (int b = 0; b < num_positive_roots(); ++b)
        if (bruhat_leq(pos_roots_[b].reflection, w)) out.push_back(b);
    return out;
}

}  // namespace kflag
