#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

enum class Family {
    FanFan,
    WheelEven,
    KipasEven,
    Kipas1Mod4,
    Kipas1Mod4AltB,
    Kipas3Mod4,
    W5W7Blowup,
    WheelCliqueBlowup,
};

std::string_view family_name(Family f);

/// A named contiguous vertex range of a construction, e.g. "K2n" or "H3".
struct Block {
    std::string name;
    Vertex first = 0;
    std::size_t size = 0;

    bool operator==(const Block&) const = default;
};

/// An extremal colouring together with the bound it certifies.
struct Construction {
    Family family = Family::FanFan;
    std::vector<int> params;
    std::string spec;  ///< canonical family grammar string, e.g. "fan:4,4"
    TwoColoring coloring;
    int claimed_bound = 0;  ///< coloring order + 1
    PatternSpec red_target;
    PatternSpec blue_target;
    std::vector<Block> blocks;
    std::vector<std::string> warnings;
};

/// Five red cliques K_{2n}, H1..H4; red between H1uH4 and H2uH3; every other
/// pair blue. Requires m >= 4 and m <= n <= floor(3m/2) - 2.
Construction fan_construction(int n, int m);

/// Red 3K_{n-1}. Requires even n >= 6; n = 6 is accepted with a warning.
Construction wheel_even_construction(int n);

/// Red K_{2m+1} u K_{m,m,m}. Requires m >= 2.
Construction kipas_even_construction(int m);

enum class KipasVariant { A, B };

/// Variant A: red K_{2m} u K_{m,m-1,m-1}.
/// Variant B: red (K_m u K_{m-1,m-1}) completely joined to 2m new, mutually
/// non-adjacent vertices. Requires even m >= 4.
Construction kipas_1mod4_construction(int m, KipasVariant variant);

/// Red K_{2m} plus four blocks H1..H4 laid out like the fan construction, each
/// block holding a red circulant of the degree dictated by m mod 8. Requires
/// odd m >= 3.
Construction kipas_3mod4_construction(int m);

/// Red = (C_7 plus chords 1-4, 2-5, 3-6)[K_2], order 14.
Construction w5w7_construction();

/// The three-chord 7-cycle used by w5w7_construction.
Graph c7_with_chords();

/// Red = witness[K_2]. The witness must avoid K_3 (wheel_kind 5 or 6) or K_4-e
/// (wheel_kind 7), and its complement must avoid K_n; both are checked and a
/// violation raises PreconditionError naming the embedding found.
Construction wheel_clique_blowup(const Graph& witness, int wheel_kind, int n, std::string witness_ref = "graph");

// ---- closed-form lower bounds ---------------------------------------------

/// 4n + ceil(m/2) when 4n <= 5m - 4, else 2n + 3m - 2.
int fan_lower_bound(int n, int m);
/// 3n - 2 for even n; (5n - 6 + sgn(n)) / 2 for odd n.
int wheel_lower_bound(int n);
/// (5n - 6 + sgn'(n)) / 2.
int kipas_lower_bound(int n);

/// The bound a family instantiation is supposed to certify:
///   FanFan {n,m}, WheelEven {n}, KipasEven {m} -> kipas 2m+2,
///   Kipas1Mod4 / Kipas1Mod4AltB / Kipas3Mod4 {m} -> kipas 2m+1,
///   W5W7Blowup {}, WheelCliqueBlowup {witness order}.
int predicted_lower_bound(Family family, std::span<const int> params);

// ---- family grammar ------------------------------------------------------

/// Resolves a witness reference (registry key or file path) for wc-blowup.
using WitnessResolver = std::function<Graph(std::string_view ref)>;

/// `fan:n,m` `wheel-even:n` `kipas-even:m` `kipas-1mod4:m[,A|B]`
/// `kipas-3mod4:m` `w5w7` `wc-blowup:<witness-ref>,<wheel_kind>,<n>`.
/// Grammar errors raise ParseError; parameter range errors PreconditionError.
Construction build_from_spec(std::string_view spec, const WitnessResolver& resolve);

} // namespace ramsey
