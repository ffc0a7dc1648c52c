// Finite root systems and Weyl groups for Cartan types A-G.
//
// Weights are integer vectors in the fundamental-weight basis. Weyl group
// elements are canonically represented by their integer matrix on the
// weight lattice and indexed in breadth-first discovery order from the
// identity; all W-indexed vectors in the library use this index.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kflag {

struct UnsupportedType : std::runtime_error {
    explicit UnsupportedType(const std::string& msg) : std::runtime_error(msg) {}
};

using Weight = std::vector<int>;  // fundamental-weight coordinates

struct Root {
    std::vector<int> simple_coeffs;  // β = Σ m_i α_i
    Weight weight_coords;            // same root in the fundamental-weight basis
    int height;                      // Σ m_i
    int reflection;                  // group index of s_β
};

struct WeylElem {
    std::vector<int> matrix;        // r×r row-major, acts on weight coordinates
    int length;
    std::vector<int> word;          // reduced word, 1-based simple-reflection indices
    int inverse;                    // group index of w⁻¹
    std::vector<int> left;          // index of s_i·w, i = 1..r
    std::vector<int> right;         // index of w·s_i
};

class RootSystem {
public:
    static constexpr int kDefaultMaxOrder = 1152;

    RootSystem(char family, int rank, long max_order = kDefaultMaxOrder);

    char family() const { return family_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

    const std::vector<Root>& positive_roots() const { return pos_roots_; }
    int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
    int dim() const { return num_positive_roots(); }  // dim G/B

    int order() const { return static_cast<int>(elements_.size()); }
    const WeylElem& elem(int w) const { return elements_[w]; }
    int identity() const { return 0; }
    int longest() const { return w0_; }

    int length(int w) const { return elements_[w].length; }
    int inverse(int w) const { return elements_[w].inverse; }
    const std::vector<int>& reduced_word(int w) const { return elements_[w].word; }
    int left_mul(int i, int w) const { return elements_[w].left[i - 1]; }    // s_i·w
    int right_mul(int w, int i) const { return elements_[w].right[i - 1]; }  // w·s_i
    int mul(int v, int w) const;  // v·w

    Weight act(int w, const Weight& lambda) const;
    // λ = Σ a_i ϖ_i with a_i = 1 for all i
    Weight rho() const { return Weight(rank_, 1); }
    Weight simple_root(int i) const;  // α_i in fundamental-weight coordinates
    Weight zero_weight() const { return Weight(rank_, 0); }

    // signed root lookup: returns (positive-root index, sign) of a weight
    // that is a root, or (-1, 0) otherwise
    std::pair<int, int> root_of_weight(const Weight& mu) const;
    bool weight_is_negative_root(const Weight& mu) const;

    // ht(±β) = ±Σ mᵢ for a root ±β = ±Σ mᵢαᵢ; throws on non-roots
    int root_height(const Weight& mu) const;
    // ⟨μ,ρ̌⟩ for any root-lattice weight (exact inverse-Cartan transform);
    // throws when μ is not in the root lattice
    int height_pairing(const Weight& mu) const;

    // multiply out a (not necessarily reduced) word of 1-based indices
    int element_from_word(const std::vector<int>& word) const;
    int element_index(const std::vector<int>& matrix) const;

    bool bruhat_leq(int v, int w) const;
    // {β > 0 : s_β ≤ w}, as positive-root indices
    std::vector<int> reflections_leq(int w) const;

    static long classical_order(char family, int rank);

private:
    void build_cartan();
    void build_roots();
    void enumerate_group(long max_order);
    void compute_words();

    std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b) const;
    Weight mat_act(const std::vector<int>& m, const Weight& lambda) const;

    char family_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> pos_roots_;
    std::map<Weight, std::pair<int, int>> root_index_;  // weight -> (index, sign)
    std::vector<WeylElem> elements_;
    std::map<std::vector<int>, int> elem_index_;
    std::vector<std::vector<int>> refl_mats_;  // scratch between build steps
    int w0_ = 0;
};

}  // namespace kflag
