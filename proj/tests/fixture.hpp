#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dubrovnik/laurent.hpp"

// Reads the checked-in expected polynomial for the tuple [4,3,5].
inline dubrovnik::LaurentPoly2 load_fixture_poly() {
    std::ifstream in(DUBROVNIK_FIXTURE_PATH);
    if (!in) {
        throw std::runtime_error("cannot open fixture file " DUBROVNIK_FIXTURE_PATH);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return dubrovnik::poly_parse(text.str());
}
