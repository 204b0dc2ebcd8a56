#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace satdtax {

// Whitespace trim (space, tab, CR, LF) on both ends.
std::string trim(std::string_view s);

// ASCII lowercase; non-ASCII bytes pass through untouched.
std::string to_lower(std::string_view s);

bool iequals(std::string_view a, std::string_view b);

// Replaces invalid UTF-8 byte sequences with U+FFFD so downstream
// JSON serialization never throws on messy source files.
std::string sanitize_utf8(std::string_view bytes);

// Splits on LF, stripping one trailing CR per line. A final line without
// a trailing newline still counts; a trailing newline does not create an
// extra empty line.
std::vector<std::string> split_lines(std::string_view text);

// Reads a whole file as bytes. Throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

void write_file(const std::string& path, std::string_view content);

// Shortest-precision decimal that round-trips a double ("%.17g" fallback).
std::string format_double(double v);

// Stable 64-bit FNV-1a, hex encoded. Used for mock-script request keys
// and the deterministic test embedder.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

}  // namespace satdtax
