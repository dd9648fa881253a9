#pragma once
#include <gmpxx.h>
#include <string>

#include "hilbreg/errors.hpp"

namespace hilbreg {

using Int = mpz_class;
using Rat = mpq_class;

// "3", "-3", "1/2", "-7/4"
inline Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw err_parse("bad rational literal '" + s + "'");
    }
}

inline std::string rat_text(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace hilbreg
