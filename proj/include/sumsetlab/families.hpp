#pragma once

#include <sumsetlab/intset.hpp>
#include <sumsetlab/sumset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sumsetlab {

/// Parameters of A_{ell,w} = [0, ell] u {w}.
class FamilyParams {
public:
    /// Requires ell >= 1 and w >= ell + 1.
    FamilyParams(Int ell, Int w);

    auto ell() const noexcept -> Int { return ell_; }
    auto w() const noexcept -> Int { return w_; }
    auto set() const -> IntSet;

private:
    Int ell_;
    Int w_;
};

/// Number of overlapping leading intervals jw + (h-j)[0,ell] in hA_{ell,w}:
/// floor(h + 1 - w/ell), clamped below at 0.
auto j0(std::size_t h, const FamilyParams & p) -> Int;

/// True when h <= (w-1)/ell, i.e. the h+1 intervals of hA_{ell,w} are disjoint.
auto in_small_branch(std::size_t h, const FamilyParams & p) -> bool;

/// |hA_{ell,w}| from the closed forms.
auto interval_family_size(const FamilyParams & p, std::size_t h) -> Int;

/// The large-h closed form alone, valid as an equality for h >= w/ell.
auto interval_family_big_branch(const FamilyParams & p, std::size_t h) -> Int;

/// |hA| for A = {0, 1, w}.
auto a1w_size(Int w, std::size_t h) -> Int;

/// Genus of <v, w> for coprime v, w: (v-1)(w-1)/2.
auto sylvester_genus(Int v, Int w) -> Int;

struct BoundCheck {
    Int observed;
    Int bound;
    bool ok;
};

/// Compares |h(A' u {w})| with the size of hA_{ell,w} for A' inside [0, ell].
auto subset_upper_bound_check(const IntSet & a_prime, Int ell, Int w, std::size_t h, Budget budget = {}) -> BoundCheck;

struct BigSplitPair {
    IntSet a;
    IntSet b;
    Int ell;
    Int w;
};

/// A = [0,ell] u {w}, B = [0,ell] u {w+1} with ell = k-2, w = ell(h1+1):
/// sizes agree through h1, then |hB| - |hA| = h - h1.
auto bigsplit_pair(Int k, Int h1) -> BigSplitPair;

struct GeometricParams {
    Int h2;
    Int g;
    Int ell;
    Int b;
    Int w;
};

struct GeometricPair {
    IntSet a; // [0, ell] u {w}
    IntSet g; // {1, g, ..., g^(ell-1)} u {b}
};

/// Validates 2 <= h2 < g < g^ell < b < w and h2*ell < w; the error names the
/// first inequality that fails.
auto geometric_pair(const GeometricParams & p) -> GeometricPair;

struct LayerComparison {
    std::size_t j;
    Int interval_layer; // |j[0,ell]| = j*ell + 1
    Int bh_layer;       // binom(ell + j - 1, j)
    bool strictly_less; // interval_layer < bh_layer
};

struct GeometricReport {
    GeometricPair pair;
    Int size_a_1, size_g_1;
    Int size_a_h2, size_g_h2;
    std::vector<LayerComparison> layers; // j in [2, h2]
    bool g0_is_bh;
    bool g_is_bh;
    std::optional<std::size_t> h3;   // first h past which |hA| > |hG| forever
    std::size_t window_checked = 0;  // |hA| > |hG| confirmed on [h3, h3 + window_checked]
    bool inequality_1;   // |1A| > |1G|
    bool inequality_2;   // |h2 A| < |h2 G|
    bool inequality_3;   // h3 found and window confirmed
};

auto verify_geometric(const GeometricParams & p, std::size_t window = 20, Budget budget = {}) -> GeometricReport;

/// Smallest h0 such that |hA| > |hB| for every h >= h0, decided exactly via
/// the eventual linear laws; nullopt if A's growth rate does not exceed B's.
auto eventual_dominance(const IntSet & a, const IntSet & b, Budget budget = {}) -> std::optional<std::size_t>;

struct BhLimits {
    std::uint64_t max_multisets = 20'000'000;
};

/// Every multiset of j <= h elements of S has a distinct sum (per j).
auto is_bh_set(const IntSet & s, std::size_t h, BhLimits limits = {}) -> bool;

/// binom(ell + j - 1, j).
auto bh_layer_size(Int ell, Int j) -> Int;

struct SizeTable {
    Int ell;
    std::vector<Int> ws;
    std::vector<std::size_t> hs;
    std::vector<std::vector<Int>> cells; // cells[row for w][column for h]
};

/// Each cell computed by the closed form and by direct enumeration; throws
/// MismatchError if they ever differ.
auto size_table(Int ell, const std::vector<Int> & ws, const std::vector<std::size_t> & hs, Budget budget = {}) -> SizeTable;

}
