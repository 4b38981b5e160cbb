#ifndef CUBIC_ERRORS_HPP
#define CUBIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cubic {

struct invalid_modulus_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_degree_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct arithmetic_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct degenerate_polynomial_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct arity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct homogeneity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct degree_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_2_integral_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// X contains a plane through the chosen line: the conic bundle is not flat
// and the count is aborted.
struct contains_plane_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precondition_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct dataset_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a claimed characteristic polynomial predicts non-integral or negative
// point counts, or fails the functional equation
struct invalid_charpoly_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cubic

#endif
