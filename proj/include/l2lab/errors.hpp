#ifndef L2LAB_ERRORS_HPP
#define L2LAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace l2lab {

// Base class for all library errors. The CLI maps these to exit code 1.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class division_by_zero : public error {
public:
    explicit division_by_zero(const std::string& what = "division by zero") : error(what) {}
};

class mismatched_groups : public error {
public:
    explicit mismatched_groups(const std::string& what = "elements belong to different group models")
        : error(what) {}
};

class invalid_group : public error {
public:
    explicit invalid_group(const std::string& what) : error(what) {}
};

class invalid_crossed_product : public error {
public:
    explicit invalid_crossed_product(const std::string& what) : error(what) {}
};

class not_idempotent : public error {
public:
    explicit not_idempotent(const std::string& what = "matrix is not idempotent") : error(what) {}
};

class non_real_trace : public error {
public:
    explicit non_real_trace(const std::string& what = "trace sum has a nonzero imaginary part")
        : error(what) {}
};

class unsupported_group : public error {
public:
    explicit unsupported_group(const std::string& what = "no rank backend for this group model")
        : error(what) {}
};

class unsupported_oracle : public error {
public:
    explicit unsupported_oracle(const std::string& what = "no Ore pair oracle for this base ring")
        : error(what) {}
};

class non_square : public error {
public:
    explicit non_square(const std::string& what = "matrix is not square") : error(what) {}
};

class invalid_complex : public error {
public:
    explicit invalid_complex(const std::string& what) : error(what) {}
};

class invalid_resolution : public error {
public:
    explicit invalid_resolution(const std::string& what) : error(what) {}
};

} // namespace l2lab

#endif
