#pragma once

#include <string>
#include <vector>

#include "ifclone/clones/clone_core.hpp"
#include "ifclone/facts/types.hpp"

namespace ifclone::textclone {

struct CloneParams {
    int min_clone_length = 6; // minimum matched lines in a clone
    int max_line_bias = 2;    // maximum lines between two exact chunks
    int min_chunk_size = 3;   // minimum lines of an exact chunk

    bool valid() const {
        return min_clone_length >= 1 && min_chunk_size >= 1 && max_line_bias >= 0 &&
               min_chunk_size <= min_clone_length;
    }
};

/// A comparison unit: trimmed non-blank lines plus the map back to the
/// original line numbers they came from.
struct NormalizedUnit {
    std::string origin; // identifies the body; self-comparison is skipped
    std::vector<std::string> lines;
    std::vector<int> original_lines; // parallel to lines
};

/// Trim leading/trailing whitespace, drop blank lines, keep a 0-based index
/// map to the original line numbers.
NormalizedUnit normalize_lines(const std::string& text);

/// Same, with original line numbers offset by `first_line` (for method
/// bodies that start mid-file).
NormalizedUnit normalize_lines(const std::string& text, int first_line);

/// One exact-match run between two units.
struct ChunkMatch {
    int a_start = 0; // normalized index in unit a
    int b_start = 0;
    int length = 0; // matched lines
    int a_first_line = 0, a_last_line = 0; // original coordinates
    int b_first_line = 0, b_last_line = 0;

    bool operator==(const ChunkMatch&) const = default;
};

struct CloneFragment {
    std::string origin;
    int start_line = 0; // original coordinates, inclusive
    int end_line = 0;

    bool operator==(const CloneFragment&) const = default;
};

/// A chain of exact chunks on one alignment, separated by at most
/// max_line_bias lines on each side, totalling >= min_clone_length matched
/// lines.
struct ClonePair {
    CloneFragment fragment_a;
    CloneFragment fragment_b;
    int matched_lines = 0;
    std::vector<ChunkMatch> chunks;

    bool operator==(const ClonePair&) const = default;
};

/// All maximal clone pairs between two units, ordered by (a start, b start).
/// When both units share an origin the comparison is skipped unless
/// allow_self is set (the full-length self-match is then reported too).
std::vector<ClonePair> detect_clones(const NormalizedUnit& a, const NormalizedUnit& b,
                                     const CloneParams& params, bool allow_self = false);

/// Code clones attributed to one duplicate-method group and one interface
/// pair (Fig. 5 shape: implementations of i's side versus j's side).
struct AssociationRecord {
    clones::DuplicateGroup group;
    facts::TypeId interface_a;
    facts::TypeId interface_b;
    int cc_count = 0;
    long copied_lc = 0; // matched lines, one side of each pair

    bool operator==(const AssociationRecord&) const = default;
};

struct AssociationOptions {
    CloneParams params;
    /// Also compare implementations within a single interface's implementer
    /// set; reported as records with interface_a == interface_b.
    bool include_within_interface = false;
    /// Strip // line comments during normalization.
    bool strip_line_comments = false;
};

struct AssociationOutcome {
    std::vector<AssociationRecord> records;
    /// Distinct duplicated lines across all bodies (overlaps deduplicated).
    long covered_line_total = 0;
};

/// For each duplicate group and each interface pair in it, run the detector
/// across the two implementation groups and aggregate pair counts and copied
/// lines. Bodies are gathered from each interface's implementation closure
/// (plus its own default methods).
AssociationOutcome associate_clones(const facts::CodeModel& model,
                                    const std::vector<clones::DuplicateGroup>& groups,
                                    const AssociationOptions& options);

} // namespace ifclone::textclone
