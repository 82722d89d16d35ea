#pragma once

#include <stdexcept>
#include <string>

namespace lssa {

/* Base class for all domain errors raised by the library. */
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by the zero scalar") {}
};

class denominator_vanishes : public error {
public:
    explicit denominator_vanishes(const std::string& what)
        : error("denominator vanishes at the binding point: " + what) {}
};

class not_invertible : public error {
public:
    explicit not_invertible(const std::string& what) : error("matrix not invertible: " + what) {}
};

class mixed_parity_input : public error {
public:
    explicit mixed_parity_input(const std::string& what)
        : error("operand is not parity-homogeneous: " + what) {}
};

class algebra_mismatch : public error {
public:
    algebra_mismatch() : error("representations live over different algebras") {}
};

class not_an_automorphism : public error {
public:
    explicit not_an_automorphism(const std::string& what)
        : error("map is not a Lie superalgebra automorphism: " + what) {}
};

class not_left_symmetric : public error {
public:
    not_left_symmetric() : error("product table violates the left-symmetry axiom") {}
};

class not_bijective : public error {
public:
    explicit not_bijective(const std::string& what) : error("cocycle is not bijective: " + what) {}
};

class odd_base_point : public error {
public:
    odd_base_point() : error("evaluation base point has a nonzero odd component") {}
};

class excluded_parameter : public error {
public:
    explicit excluded_parameter(const std::string& what)
        : error("parameter value is excluded: " + what) {}
};

class typical_weight : public error {
public:
    explicit typical_weight(const std::string& what)
        : error("operation requires an atypical weight: " + what) {}
};

class certification_failed : public error {
public:
    explicit certification_failed(const std::string& what)
        : error("nonexistence certificate failed: " + what) {}
};

} // namespace lssa
