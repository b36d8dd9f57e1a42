#pragma once

#include <string>
#include <vector>

#include "treepoly/tree.hpp"

namespace treepoly {

struct Exhibit {
    std::string name;         // "figure2", "figure9", "figure10"
    std::string description;
    Tree first;
    Tree second;
    std::string checksum;     // digest_hex of first.to_edge_list() + second.to_edge_list()
};

/// Hard-coded pairs: the smallest trees with equal gdp (11 vertices), the
/// 18-vertex pair with equal hdp, and the 19-vertex pair with equal hdp and
/// different gdp. Throws Error if an embedded transcription fails its checksum.
std::vector<Exhibit> builtin_exhibits();

std::string exhibit_checksum(const Tree& first, const Tree& second);

struct CheckLine {
    std::string label;
    bool ok = false;
};

struct ExhibitReport {
    std::string name;
    std::vector<CheckLine> checks;
    bool ok() const;
};

/// Re-validates every documented property of the exhibits.
std::vector<ExhibitReport> verify_exhibits();

} // namespace treepoly
