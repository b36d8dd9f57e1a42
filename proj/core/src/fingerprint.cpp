#include "treepoly/fingerprint.hpp"

#include <mutex>

#include <sodium.h>

#include "treepoly/csf.hpp"
#include "treepoly/degree_poly.hpp"
#include "treepoly/subtree_census.hpp"

namespace treepoly {

std::string_view to_string(InvariantTag tag)
{
    switch (tag) {
    case InvariantTag::csf: return "csf";
    case InvariantTag::gdp: return "gdp";
    case InvariantTag::hdp: return "hdp";
    case InvariantTag::stp: return "stp";
    case InvariantTag::soup: return "soup";
    case InvariantTag::hdp_gdp: return "hdp+gdp";
    }
    return "?";
}

std::optional<InvariantTag> parse_invariant_tag(std::string_view text)
{
    for (auto tag : {InvariantTag::csf, InvariantTag::gdp, InvariantTag::hdp, InvariantTag::stp, InvariantTag::soup,
                     InvariantTag::hdp_gdp})
        if (to_string(tag) == text)
            return tag;
    return std::nullopt;
}

Digest digest_of(std::string_view bytes)
{
    static std::once_flag init;
    std::call_once(init, [] {
        if (sodium_init() < 0)
            throw Error("libsodium failed to initialize");
    });
    Digest d{};
    crypto_generichash(d.data(), d.size(), reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(),
                       nullptr, 0);
    return d;
}

std::string digest_hex(const Digest& d)
{
    std::string out(d.size() * 2 + 1, '\0');
    sodium_bin2hex(out.data(), out.size(), d.data(), d.size());
    out.pop_back();
    return out;
}

std::string invariant_payload(const Tree& t, InvariantTag tag)
{
    switch (tag) {
    case InvariantTag::csf: return csf_powersum(t).to_text();
    case InvariantTag::gdp: return gdp(t).to_text();
    case InvariantTag::hdp: return hdp(t).to_text();
    case InvariantTag::stp: return stp(t).to_text();
    case InvariantTag::soup: return soup(t).to_text();
    case InvariantTag::hdp_gdp: return hdp(t).to_text() + "|" + gdp(t).to_text();
    }
    throw DomainError("unknown invariant tag");
}

Fingerprint fingerprint(const Tree& t, InvariantTag tag, bool keep_payload)
{
    Fingerprint f;
    f.tag = tag;
    std::string payload = invariant_payload(t, tag);
    f.digest = digest_of(payload);
    if (keep_payload)
        f.payload = std::move(payload);
    return f;
}

} // namespace treepoly
