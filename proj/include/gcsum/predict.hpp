#pragma once

#include <optional>
#include <string>

#include "gcsum/errors.hpp"

namespace gcsum {

// Closed-form predictions, reproduced exactly as published. Several of them
// are refuted by exact computation (see verify); this function never corrects
// them, the verifier adjudicates.
enum class Family {
    path,
    cycle,
    extended_path,
    extended_cycle,
    bipartite_ext_even,
    bipartite_ext_odd,
    hall_bipartite,
};

inline Family family_from_string(const std::string& s) {
    if (s == "path") return Family::path;
    if (s == "cycle") return Family::cycle;
    if (s == "extended_path") return Family::extended_path;
    if (s == "extended_cycle") return Family::extended_cycle;
    if (s == "bipartite_ext_even") return Family::bipartite_ext_even;
    if (s == "bipartite_ext_odd") return Family::bipartite_ext_odd;
    if (s == "hall_bipartite") return Family::hall_bipartite;
    fail(errc::unknown_family, "unknown family '" + s + "'");
}

struct FamilyParams {
    int n = 0;    // order, or |X| for the bipartite families
    int m = 0;    // |Y| for the bipartite families
    int ell = 0;  // maximum bi-distinct non-adjacent cross pairs
};

struct Prediction {
    std::optional<long> chi_sum_min;
    std::optional<long> chi_sum_max;
};

inline Prediction predict(Family family, const FamilyParams& p) {
    const long n = p.n, m = p.m, ell = p.ell;
    switch (family) {
        case Family::path: {
            require(n >= 1, errc::invalid_params, "path needs n >= 1");
            if (n == 1) return {1, 1};
            if (n % 2 == 0) return {3 * n / 2, 3 * n / 2};
            return {3 * (n / 2) + 1, 3 * (n / 2) + 2};
        }
        case Family::cycle: {
            require(n >= 3, errc::invalid_params, "cycle needs n >= 3");
            long lo = 3 * ((n + 1) / 2);
            long hi = n % 2 == 0 ? 5 * n / 2 : 5 * (n / 2) + 1;
            return {lo, hi};
        }
        case Family::extended_path: {
            require(n >= 4 && n % 2 == 0, errc::invalid_params, "extended path needs even n >= 4");
            if (n == 4) return {7, 9};
            return {3 * n / 2, 5 * n / 2 - 1};
        }
        case Family::extended_cycle: {
            require(n >= 4 && n % 2 == 0, errc::invalid_params, "extended cycle needs even n >= 4");
            if (n == 4) return {10, 10};
            long t = n / 2;
            return {3 * n / 2, t % 2 == 0 ? 5 * n / 2 - 1 : 5 * n / 2 - 3};
        }
        case Family::bipartite_ext_even: {
            require(n >= m && m >= 1 && n % 2 == 0 && m % 2 == 0, errc::invalid_params,
                    "even balanced case needs even n >= m >= 1");
            require(ell >= 0 && ell <= m, errc::invalid_params, "ell must lie in [0, m]");
            if (ell % 2 == 0) return {3 * (n - ell) / 2 + 7 * (m - ell) / 2 + 3 * ell, std::nullopt};
            return {(n - ell) / 2 + 2 * ((n - ell + 1) / 2) + 7 * (m - ell + 1) / 2 + 3 * ell,
                    std::nullopt};
        }
        case Family::bipartite_ext_odd: {
            require(n >= m && m >= 1 && n % 2 == 1 && m % 2 == 1, errc::invalid_params,
                    "odd balanced case needs odd n >= m >= 1");
            require(ell >= 0 && ell <= m, errc::invalid_params, "ell must lie in [0, m]");
            if (ell % 2 == 0)
                return {(n - ell) / 2 + 2 * ((n - ell + 1) / 2) + 7 * (m - ell + 1) / 2 + 3 * ell,
                        std::nullopt};
            return {3 * (n - ell) / 2 + 7 * (m - ell) / 2 + 3 * ell, std::nullopt};
        }
        case Family::hall_bipartite: {
            require(n >= 4 && n % 2 == 0, errc::invalid_params, "Hall case needs even order n >= 4");
            return {3 * n / 2, 5 * n / 2 - 3};
        }
    }
    fail(errc::unknown_family, "unhandled family");
}

}  // namespace gcsum
