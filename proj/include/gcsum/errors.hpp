#pragma once

#include <stdexcept>
#include <string>

namespace gcsum {

// Every rejection the library can produce, so callers and tests can match on
// the reason instead of parsing message text.
enum class errc {
    out_of_range,
    loop,
    duplicate_edge,
    size_limit_exceeded,
    invalid_partition,
    unbalanced_partition,
    odd_order,
    even_order,
    matching_not_perfect,
    matching_not_in_complement,
    precondition_violated,
    not_almost_regular,
    not_a_partition,
    odd_part,
    hall_condition_fails,
    too_small,
    leftover_unpairable,
    edge_not_present,
    index_out_of_range,
    cyclic_spec_rejected,
    malformed_spec,
    no_extension_exists,
    unknown_family,
    invalid_params,
    unknown_theorem,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::out_of_range: return "out_of_range";
        case errc::loop: return "loop";
        case errc::duplicate_edge: return "duplicate_edge";
        case errc::size_limit_exceeded: return "size_limit_exceeded";
        case errc::invalid_partition: return "invalid_partition";
        case errc::unbalanced_partition: return "unbalanced_partition";
        case errc::odd_order: return "odd_order";
        case errc::even_order: return "even_order";
        case errc::matching_not_perfect: return "matching_not_perfect";
        case errc::matching_not_in_complement: return "matching_not_in_complement";
        case errc::precondition_violated: return "precondition_violated";
        case errc::not_almost_regular: return "not_almost_regular";
        case errc::not_a_partition: return "not_a_partition";
        case errc::odd_part: return "odd_part";
        case errc::hall_condition_fails: return "hall_condition_fails";
        case errc::too_small: return "too_small";
        case errc::leftover_unpairable: return "leftover_unpairable";
        case errc::edge_not_present: return "edge_not_present";
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::cyclic_spec_rejected: return "cyclic_spec_rejected";
        case errc::malformed_spec: return "malformed_spec";
        case errc::no_extension_exists: return "no_extension_exists";
        case errc::unknown_family: return "unknown_family";
        case errc::invalid_params: return "invalid_params";
        case errc::unknown_theorem: return "unknown_theorem";
        case errc::parse_error: return "parse_error";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace gcsum
