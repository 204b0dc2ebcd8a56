#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace satdtax {

// One debt-admitting comment with its source location and, when the
// dataset ships them, the human-assigned category labels.
struct SatdComment {
    std::string id;
    std::string text;
    std::string file_path;   // relative to the dataset's source root
    int line_number = 1;     // 1-based
    std::optional<std::string> human_main;
    std::optional<std::string> human_sub;
};

struct Dataset {
    std::string name;
    std::vector<SatdComment> comments;  // manifest order, stable across loads
    std::string source_root;

    bool operator==(const Dataset&) const = default;
};

inline bool operator==(const SatdComment& a, const SatdComment& b) {
    return a.id == b.id && a.text == b.text && a.file_path == b.file_path &&
           a.line_number == b.line_number && a.human_main == b.human_main &&
           a.human_sub == b.human_sub;
}

// Window of source lines handed to the model alongside a comment.
struct SourceContext {
    std::vector<std::string> lines;
    int start_line = 1;      // 1-based line number of lines[0]
    bool truncated = false;
};

// Reference category sets and assignments from a human-built taxonomy.
// Name vectors keep first-appearance order so derived artifacts are
// deterministic; membership is unique.
struct HumanAssignment {
    std::string main;
    std::optional<std::string> sub;
};

struct HumanTaxonomyRef {
    std::vector<std::string> main_names;
    std::vector<std::string> sub_names;
    std::map<std::string, HumanAssignment> assignments;  // comment id -> labels

    // Ids labeled at the given level ("main" or "sub").
    std::vector<std::string> ids_at(const std::string& level) const;
};

inline constexpr int kContextLineCap = 2000;
inline constexpr int kContextLinesBefore = 1000;

// Loads a JSON Lines manifest: one object per comment with keys
// "id", "text", "file", "line" and optional "human_main"/"human_sub".
// source_root is attached to the returned Dataset; files are not touched
// here (see validate_sources).
Dataset load_dataset(const std::string& manifest_path,
                     const std::string& source_root = "");

// Re-serializes a dataset in the manifest format; load(save(d)) == d.
void save_dataset(const Dataset& dataset, const std::string& manifest_path);

// Checks that every comment's file resolves under source_root.
void validate_sources(const Dataset& dataset);

// Returns the code window around the comment. Files of at most
// kContextLineCap lines come back whole; longer files yield the window
// [line-1000, line+999] clamped to file bounds (no re-extension at the
// edges, so a near-boundary comment gets a shorter window).
SourceContext extract_context(const Dataset& dataset, const SatdComment& comment);

// Same extraction on already-loaded file content (pure function; the
// file-reading overload delegates here).
SourceContext extract_context_from_text(const std::string& file_content,
                                        int line_number);

// Builds the human reference either from a dataset manifest (uses the
// human_main/human_sub fields) or from a standalone JSON file of the form
// {"assignments": {id: [main, sub]}}.
HumanTaxonomyRef load_human_reference(const std::string& manifest_path);
HumanTaxonomyRef human_reference_from_dataset(const Dataset& dataset);

}  // namespace satdtax
