#pragma once
#include <stdexcept>
#include <string>
#include <utility>

namespace hilbreg {

// Domain errors carry a short machine-readable kind (NotAdmissible, ChartMiss, ...).
// The CLI maps domain_error -> exit 2, size_guard_error -> exit 3.
struct domain_error : std::runtime_error {
    std::string kind;
    domain_error(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

struct size_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated internal invariant; signals a bug, not a user error.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline domain_error err_not_admissible(const std::string& m) { return {"NotAdmissible", m}; }
inline domain_error err_not_strongly_stable(const std::string& m) { return {"NotStronglyStable", m}; }
inline domain_error err_chart_miss(const std::string& m) { return {"ChartMiss", m}; }
inline domain_error err_rank_deficient(const std::string& m) { return {"RankDeficient", m}; }
inline domain_error err_dimension_mismatch(const std::string& m) { return {"DimensionMismatch", m}; }
inline domain_error err_degree_mismatch(const std::string& m) { return {"DegreeMismatch", m}; }
inline domain_error err_tail_in_ideal(const std::string& m) { return {"TailInIdeal", m}; }
inline domain_error err_head_missing(const std::string& m) { return {"HeadMissing", m}; }
inline domain_error err_parse(const std::string& m) { return {"ParseError", m}; }
inline domain_error err_invalid_argument(const std::string& m) { return {"InvalidArgument", m}; }

}  // namespace hilbreg
