#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "gcsum/errors.hpp"

// Catch matcher for the library's error codes.
class HasCode : public Catch::Matchers::MatcherBase<gcsum::error> {
public:
    explicit HasCode(gcsum::errc code) : code_(code) {}
    bool match(const gcsum::error& e) const override { return e.code() == code_; }
    std::string describe() const override {
        return std::string("has code ") + gcsum::errc_name(code_);
    }

private:
    gcsum::errc code_;
};

#define CHECK_FAILS_WITH(expr, code) CHECK_THROWS_MATCHES(expr, gcsum::error, HasCode(code))
