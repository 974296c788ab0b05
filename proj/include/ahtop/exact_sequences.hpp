#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ahtop/errors.hpp"
#include "ahtop/graph.hpp"
#include "ahtop/hom_graph.hpp"
#include "ahtop/mapping_fiber.hpp"
#include "ahtop/paths_loops.hpp"

namespace ahtop {

/// stages[0] -> stages[1] -> ... with maps[i]: stages[i] -> stages[i + 1].
struct PointedSequence {
    std::vector<GraphPtr> stages;
    std::vector<GraphMap> maps;
    std::vector<std::string> tags;  // one per stage

    /// Throws std::invalid_argument unless maps compose and are pointed.
    void validate() const;
};

struct Probe {
    std::string name;
    GraphPtr graph;
};

/// K1, I1, I2, C3, C4, C5, each pointed at 0.
std::vector<Probe> default_probes();
/// "K1", "I3", "C5", "Q2" style names.
Probe probe_from_name(const std::string& name);

enum class ExactnessStatus { exact, image_smaller_than_kernel, image_not_in_kernel, inconclusive };

struct ExactnessVerdict {
    std::string probe;
    std::size_t position = 0;  // index of the middle stage
    ExactnessStatus status = ExactnessStatus::inconclusive;
    std::vector<std::size_t> image_classes;
    std::vector<std::size_t> kernel_classes;
    std::optional<std::size_t> witness_class;  // in ker \ im or im \ ker
    std::vector<std::size_t> class_counts;     // [K, .] at the three stages
    std::string note;

    bool refuted() const noexcept {
        return status == ExactnessStatus::image_smaller_than_kernel || status == ExactnessStatus::image_not_in_kernel;
    }
};

/**
 * Exactness of [K, X] -> [K, Y] -> [K, Z] at the stage `position` (Y) in
 * pointed sets: the image of the incoming class function against the
 * preimage of the base class under the outgoing one. A capped class table
 * gives an inconclusive verdict.
 */
ExactnessVerdict check_exact_at(const PointedSequence& seq, std::size_t position, const Probe& probe,
                                const Limits& limits = {});

// ---------------------------------------------------------------------------
// Suspension and adjunction

struct Suspension {
    GraphPtr graph;                 // Sigma_l G, base = contracted vertex
    std::size_t length = 0;         // l
    std::vector<Vertex> projection; // G (box) I_l -> Sigma_l G, index u * (l + 1) + t
};

/// Reduced suspension: G (box) I_l with both end levels and the base column contracted to one vertex.
Suspension suspension(const PointedGraph& g, std::size_t l);

/// Phi(f)(u) = the loop t |-> f(u, t) in Omega_{<=l} H.
GraphMap adjoint(const GraphMap& f, const Suspension& s, const GraphPtr& g, const PathGraph& loops);
/// Inverse of Phi: psi: G -> Omega_{<=l} H back to Sigma_l G -> H.
GraphMap coadjoint(const GraphMap& psi, const Suspension& s, const PathGraph& loops);

struct AdjunctionReport {
    std::size_t length = 0;
    std::size_t suspension_vertices = 0;
    std::size_t loop_vertices = 0;
    std::size_t left_maps = 0;     // pointed maps Sigma_l G -> H
    std::size_t right_maps = 0;    // pointed maps G -> Omega_{<=l} H
    std::size_t left_classes = 0;
    std::size_t right_classes = 0;
    bool bijective_on_maps = false;
    bool preserves_one_step = false;  // one-step homotopies transported both ways
    bool well_defined = false;        // classes go to classes
    bool bijective_on_classes = false;
    std::vector<std::size_t> class_map;  // left class -> right class

    bool holds() const noexcept {
        return bijective_on_maps && preserves_one_step && well_defined && bijective_on_classes &&
               left_classes == right_classes;
    }
};

/// Compares [Sigma_l G, H] with [G, Omega_{<=l} H] through Phi.
AdjunctionReport adjunction_check(const GraphPtr& g, const GraphPtr& h, std::size_t l, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Puppe sequence

struct LevelHypothesis {
    std::size_t level = 0;  // n: loops in Omega^{n-1}, i.e. vertices of Omega^n
    std::optional<SublengthReport> source_sublength;
    std::optional<SublengthReport> target_sublength;
    std::optional<bool> surjective;           // Omega^n f1 on truncated vertex sets
    std::optional<Path> missed_loop;          // first target loop not hit
    std::string note;                         // set when the level was capped
};

struct PuppeHypothesisReport {
    std::size_t max_length = 0;
    std::size_t depth = 0;
    std::size_t bound = 4;
    std::vector<LevelHypothesis> levels;
    std::vector<ExactnessVerdict> base_exactness;  // Mf1 -> G -> H, one per probe

    bool hypotheses_met() const;
};

PuppeHypothesisReport check_puppe_hypotheses(const GraphMap& f1, std::size_t max_length, std::size_t depth,
                                             const std::vector<Probe>& probes, const Limits& limits = {},
                                             std::size_t bound = 4);

/// Omega^d Mf1 -> Omega^d G -> Omega^d H -> ... -> Mf1 -> G -> H, every loop level truncated at L.
PointedSequence build_puppe_sequence(const GraphMap& f1, std::size_t max_length, std::size_t depth,
                                     const Limits& limits = {});

struct PuppeOptions {
    std::size_t retries = 1;  // re-checks of a refuted position, each at L + 2
    std::size_t bound = 4;
};

struct PuppePositionVerdict {
    ExactnessVerdict verdict;                     // final attempt
    std::vector<std::size_t> refuted_at;          // truncation lengths that refuted
    std::size_t checked_length = 0;               // truncation of the final attempt
};

struct PuppeReport {
    std::size_t max_length = 0;
    std::size_t depth = 0;
    PuppeOptions options;
    std::vector<std::string> stage_tags;
    std::vector<std::size_t> stage_sizes;
    std::vector<std::string> probes;
    PuppeHypothesisReport hypotheses;
    std::vector<PuppePositionVerdict> verdicts;  // ordered by (position, probe)
    std::string aggregate;                       // "exact", "refuted" or "inconclusive"
};

PuppeReport puppe_build_and_check(const GraphMap& f1, std::size_t max_length, std::size_t depth,
                                  const std::vector<Probe>& probes, const PuppeOptions& options = {},
                                  const Limits& limits = {});

const char* to_string(ExactnessStatus s);

}  // namespace ahtop
