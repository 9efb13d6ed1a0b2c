#include "mye/algorithms.hpp"

#include <fmt/format.h>

#include "mye/citation.hpp"
#include "mye/hetero.hpp"

namespace mye {

std::string_view to_string(Network n) {
    switch (n) {
        case Network::Citation: return "citation";
        case Network::Authorship: return "authorship";
        case Network::Hetero: return "hetero";
    }
    return "?";
}

std::string_view algo_id(Algorithm a) {
    switch (a) {
        case Algorithm::CitationSS: return "ss";
        case Algorithm::CitationAS: return "as";
        case Algorithm::CitationAA: return "aa";
        case Algorithm::AuthorBa: return "ba";
        case Algorithm::AuthorIter: return "iter";
        case Algorithm::AuthorAdvIter: return "adviter";
        case Algorithm::HeteroSSBa: return "ssba";
        case Algorithm::HeteroASIter: return "asiter";
        case Algorithm::HeteroAdvIter: return "adviter";
    }
    return "?";
}

Network network_of(Algorithm a) {
    switch (a) {
        case Algorithm::CitationSS:
        case Algorithm::CitationAS:
        case Algorithm::CitationAA: return Network::Citation;
        case Algorithm::AuthorBa:
        case Algorithm::AuthorIter:
        case Algorithm::AuthorAdvIter: return Network::Authorship;
        default: return Network::Hetero;
    }
}

std::optional<Network> parse_network(std::string_view s) {
    if (s == "citation") return Network::Citation;
    if (s == "authorship") return Network::Authorship;
    if (s == "hetero") return Network::Hetero;
    return std::nullopt;
}

Algorithm resolve_algorithm(Network n, std::string_view algo) {
    const std::string_view id = (n == Network::Hetero && algo == "g-adviter") ? "adviter" : algo;
    for (Algorithm a : kAllAlgorithms) {
        if (network_of(a) == n && algo_id(a) == id) return a;
    }
    throw UnknownAlgorithm(fmt::format("algorithm '{}' is not defined for the {} network", algo, to_string(n)));
}

Estimation run(const MaskedGraph& g, Algorithm a, authorship::Gamma gamma) {
    switch (a) {
        case Algorithm::CitationSS: return citation::estimate(g, citation::Variant::SS);
        case Algorithm::CitationAS: return citation::estimate(g, citation::Variant::AS);
        case Algorithm::CitationAA: return citation::estimate(g, citation::Variant::AA);
        case Algorithm::AuthorBa: return authorship::estimate_ba(g);
        case Algorithm::AuthorIter: return authorship::estimate_iter(g);
        case Algorithm::AuthorAdvIter: return authorship::estimate_adviter(g, gamma);
        case Algorithm::HeteroSSBa: return hetero::estimate_ssba(g);
        case Algorithm::HeteroASIter: return hetero::estimate_asiter(g);
        case Algorithm::HeteroAdvIter: return hetero::estimate_adviter(g, gamma);
    }
    throw UnknownAlgorithm("unknown algorithm");
}

}  // namespace mye
