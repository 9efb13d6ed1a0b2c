#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mye/authorship.hpp"
#include "mye/estimation.hpp"

/// Uniform entry point over the nine estimators.
namespace mye {

enum class Network : std::uint8_t { Citation, Authorship, Hetero };

enum class Algorithm : std::uint8_t {
    CitationSS,
    CitationAS,
    CitationAA,
    AuthorBa,
    AuthorIter,
    AuthorAdvIter,
    HeteroSSBa,
    HeteroASIter,
    HeteroAdvIter,
};

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::CitationSS,   Algorithm::CitationAS,    Algorithm::CitationAA,
    Algorithm::AuthorBa,     Algorithm::AuthorIter,    Algorithm::AuthorAdvIter,
    Algorithm::HeteroSSBa,   Algorithm::HeteroASIter,  Algorithm::HeteroAdvIter,
};

class UnknownAlgorithm : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string_view to_string(Network n);
/// Short algo id as used on the command line, e.g. "as" or "adviter".
std::string_view algo_id(Algorithm a);
Network network_of(Algorithm a);

std::optional<Network> parse_network(std::string_view s);
/// Resolves an algo id within a network. "g-adviter" is accepted for the
/// hetero AdvIter. Throws UnknownAlgorithm when the pair is invalid.
Algorithm resolve_algorithm(Network n, std::string_view algo);

/// Runs one estimator. `gamma` is only read by the AdvIter variants.
Estimation run(const MaskedGraph& g, Algorithm a, authorship::Gamma gamma = {});

}  // namespace mye
