#pragma once

#include <stdexcept>
#include <string>

namespace diocert {

// Raised when an interval is too wide to certify a decision at the current
// working precision. Callers escalate precision and retry, up to a ceiling.
class precision_exhausted : public std::runtime_error {
public:
    explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

class index_out_of_range : public std::out_of_range {
public:
    explicit index_out_of_range(const std::string& what) : std::out_of_range(what) {}
};

class zero_input : public domain_error {
public:
    explicit zero_input(const std::string& what) : domain_error(what) {}
};

class degenerate_denominator : public std::runtime_error {
public:
    explicit degenerate_denominator(const std::string& what) : std::runtime_error(what) {}
};

class hypothesis_violation : public std::runtime_error {
public:
    explicit hypothesis_violation(const std::string& what) : std::runtime_error(what) {}
};

class no_convergent_found : public std::runtime_error {
public:
    explicit no_convergent_found(const std::string& what) : std::runtime_error(what) {}
};

class degenerate_case : public std::runtime_error {
public:
    explicit degenerate_case(const std::string& what) : std::runtime_error(what) {}
};

class non_convergence : public std::runtime_error {
public:
    explicit non_convergence(const std::string& what) : std::runtime_error(what) {}
};

class degenerate_spec : public std::runtime_error {
public:
    explicit degenerate_spec(const std::string& what) : std::runtime_error(what) {}
};

} // namespace diocert
