#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "treepoly/tree.hpp"

namespace treepoly {

enum class InvariantTag { csf, gdp, hdp, stp, soup, hdp_gdp };

/// "csf", "gdp", "hdp", "stp", "soup", "hdp+gdp"
std::string_view to_string(InvariantTag tag);
std::optional<InvariantTag> parse_invariant_tag(std::string_view text);

using Digest = std::array<std::uint8_t, 16>;

/// BLAKE2b with a 16-byte output.
Digest digest_of(std::string_view bytes);
std::string digest_hex(const Digest& d);

/// Canonical serialization of the tagged invariant: the polynomial text forms,
/// which are byte-equal exactly when the polynomials are equal.
std::string invariant_payload(const Tree& t, InvariantTag tag);

struct Fingerprint {
    InvariantTag tag = InvariantTag::hdp;
    Digest digest{};
    std::string payload;  // empty unless requested

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Tree& t, InvariantTag tag, bool keep_payload = false);

} // namespace treepoly
