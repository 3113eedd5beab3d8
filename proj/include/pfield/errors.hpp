#pragma once

#include <stdexcept>
#include <string>

namespace pfield {

enum class errc {
    division_by_zero,
    indeterminate_result,
    syntax_error,
    unknown_variable,
    empty_product,
    too_few_roots,
    not_distinct_forms,
    unsupported,
    not_monic,
    roots_unavailable,
    degree_too_small,
    not_flabby,
    degree_mismatch,
    unresolved_input,
    identity_fails,
    constant_h,
    unfactored_denominator,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::indeterminate_result: return "IndeterminateResult";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_variable: return "UnknownVariable";
    case errc::empty_product: return "EmptyProduct";
    case errc::too_few_roots: return "TooFewRoots";
    case errc::not_distinct_forms: return "NotDistinctForms";
    case errc::unsupported: return "Unsupported";
    case errc::not_monic: return "NotMonic";
    case errc::roots_unavailable: return "RootsUnavailable";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::not_flabby: return "NotFlabby";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::unresolved_input: return "UnresolvedInput";
    case errc::identity_fails: return "IdentityFails";
    case errc::constant_h: return "ConstantH";
    case errc::unfactored_denominator: return "UnfactoredDenominator";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Error";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// Syntax errors carry the 0-based offset of the offending token.
class syntax_error : public error {
public:
    syntax_error(const std::string& what, std::size_t pos)
        : error(errc::syntax_error, what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

} // namespace pfield
