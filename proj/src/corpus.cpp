#include "satdtax/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "satdtax/text.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace satdtax {

namespace {

std::string dataset_name_from_path(const std::string& manifest_path) {
    return fs::path(manifest_path).stem().string();
}

void push_unique(std::vector<std::string>& names, const std::string& name) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        names.push_back(name);
    }
}

}  // namespace

std::vector<std::string> HumanTaxonomyRef::ids_at(const std::string& level) const {
    std::vector<std::string> ids;
    for (const auto& [id, a] : assignments) {
        if (level == "main" || (level == "sub" && a.sub.has_value())) {
            ids.push_back(id);
        }
    }
    return ids;
}

Dataset load_dataset(const std::string& manifest_path,
                     const std::string& source_root) {
    std::ifstream in(manifest_path);
    if (!in) {
        throw std::runtime_error("cannot open dataset manifest: " + manifest_path);
    }

    Dataset ds;
    ds.name = dataset_name_from_path(manifest_path);
    ds.source_root = source_root;

    std::set<std::string> seen_ids;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            throw std::runtime_error("manifest parse failure at line " +
                                     std::to_string(line_no) + ": " + e.what());
        }
        SatdComment c;
        try {
            c.id = rec.at("id").get<std::string>();
            c.text = rec.at("text").get<std::string>();
            c.file_path = rec.at("file").get<std::string>();
            c.line_number = rec.at("line").get<int>();
        } catch (const json::exception& e) {
            throw std::runtime_error("manifest record at line " +
                                     std::to_string(line_no) +
                                     " is missing a required field: " + e.what());
        }
        if (rec.contains("human_main")) {
            c.human_main = rec["human_main"].get<std::string>();
        }
        if (rec.contains("human_sub")) {
            c.human_sub = rec["human_sub"].get<std::string>();
        }

        if (c.id.empty()) {
            throw std::runtime_error("record at line " + std::to_string(line_no) +
                                     " has an empty id");
        }
        if (!seen_ids.insert(c.id).second) {
            throw std::runtime_error("duplicate comment id \"" + c.id + "\"");
        }
        if (trim(c.text).empty()) {
            throw std::runtime_error("comment \"" + c.id + "\" has empty text");
        }
        if (c.line_number < 1) {
            throw std::runtime_error("comment \"" + c.id +
                                     "\" has line_number < 1");
        }
        if (c.human_sub && !c.human_main) {
            throw std::runtime_error("comment \"" + c.id +
                                     "\" has a sub label but no main label");
        }
        ds.comments.push_back(std::move(c));
    }

    if (ds.comments.empty()) {
        throw std::runtime_error("dataset contains no comments: " + manifest_path);
    }
    return ds;
}

void save_dataset(const Dataset& dataset, const std::string& manifest_path) {
    std::ostringstream out;
    for (const auto& c : dataset.comments) {
        ordered_json rec;
        rec["id"] = c.id;
        rec["text"] = c.text;
        rec["file"] = c.file_path;
        rec["line"] = c.line_number;
        if (c.human_main) rec["human_main"] = *c.human_main;
        if (c.human_sub) rec["human_sub"] = *c.human_sub;
        out << rec.dump() << '\n';
    }
    write_file(manifest_path, out.str());
}

void validate_sources(const Dataset& dataset) {
    for (const auto& c : dataset.comments) {
        const fs::path p = fs::path(dataset.source_root) / c.file_path;
        if (!fs::exists(p)) {
            throw std::runtime_error("source file for comment \"" + c.id +
                                     "\" not found: " + p.string());
        }
    }
}

SourceContext extract_context_from_text(const std::string& file_content,
                                        int line_number) {
    const std::vector<std::string> all = split_lines(sanitize_utf8(file_content));
    const int n = static_cast<int>(all.size());
    if (n < 1) {
        throw std::runtime_error("source file has no lines");
    }
    if (line_number > n) {
        throw std::runtime_error("comment line " + std::to_string(line_number) +
                                 " is past the end of the file (" +
                                 std::to_string(n) + " lines)");
    }

    SourceContext ctx;
    if (n <= kContextLineCap) {
        ctx.lines = all;
        ctx.start_line = 1;
        ctx.truncated = false;
        return ctx;
    }
    const int first = std::max(1, line_number - kContextLinesBefore);
    const int last = std::min(
        n, line_number - kContextLinesBefore + kContextLineCap - 1);
    ctx.lines.assign(all.begin() + (first - 1), all.begin() + last);
    ctx.start_line = first;
    ctx.truncated = true;
    return ctx;
}

SourceContext extract_context(const Dataset& dataset, const SatdComment& comment) {
    const fs::path p = fs::path(dataset.source_root) / comment.file_path;
    std::string content;
    try {
        content = read_file(p.string());
    } catch (const std::exception&) {
        throw std::runtime_error("source file for comment \"" + comment.id +
                                 "\" not found: " + p.string());
    }
    try {
        return extract_context_from_text(content, comment.line_number);
    } catch (const std::exception& e) {
        throw std::runtime_error("comment \"" + comment.id + "\": " + e.what());
    }
}

HumanTaxonomyRef human_reference_from_dataset(const Dataset& dataset) {
    HumanTaxonomyRef ref;
    for (const auto& c : dataset.comments) {
        if (!c.human_main) continue;
        if (trim(*c.human_main).empty()) {
            throw std::runtime_error("comment \"" + c.id +
                                     "\" has an empty main label");
        }
        HumanAssignment a;
        a.main = *c.human_main;
        push_unique(ref.main_names, a.main);
        if (c.human_sub) {
            if (trim(*c.human_sub).empty()) {
                throw std::runtime_error("comment \"" + c.id +
                                         "\" has an empty sub label");
            }
            a.sub = *c.human_sub;
            push_unique(ref.sub_names, *a.sub);
        }
        ref.assignments[c.id] = std::move(a);
    }
    if (ref.assignments.empty()) {
        throw std::runtime_error("dataset carries no human labels");
    }
    return ref;
}

HumanTaxonomyRef load_human_reference(const std::string& manifest_path) {
    const std::string content = read_file(manifest_path);
    const std::string first = trim(content.substr(0, content.find('\n')));

    // Standalone reference files are a single JSON object with an
    // "assignments" key; anything else is treated as a dataset manifest.
    if (!first.empty() && first.front() == '{' &&
        first.find("\"assignments\"") != std::string::npos) {
        json doc;
        try {
            doc = json::parse(content);
        } catch (const json::exception& e) {
            throw std::runtime_error("reference parse failure: " +
                                     std::string(e.what()));
        }
        HumanTaxonomyRef ref;
        for (const auto& [id, labels] : doc.at("assignments").items()) {
            if (!labels.is_array() || labels.empty() || labels.size() > 2) {
                throw std::runtime_error("reference assignment for \"" + id +
                                         "\" must be [main] or [main, sub]");
            }
            HumanAssignment a;
            a.main = labels[0].get<std::string>();
            if (trim(a.main).empty()) {
                throw std::runtime_error("comment \"" + id +
                                         "\" has an empty main label");
            }
            push_unique(ref.main_names, a.main);
            if (labels.size() == 2) {
                a.sub = labels[1].get<std::string>();
                if (trim(*a.sub).empty()) {
                    throw std::runtime_error("comment \"" + id +
                                             "\" has an empty sub label");
                }
                push_unique(ref.sub_names, *a.sub);
            }
            ref.assignments[id] = std::move(a);
        }
        if (ref.assignments.empty()) {
            throw std::runtime_error("reference contains no assignments");
        }
        return ref;
    }
    return human_reference_from_dataset(load_dataset(manifest_path));
}

}  // namespace satdtax
