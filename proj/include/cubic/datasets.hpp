#ifndef CUBIC_DATASETS_HPP
#define CUBIC_DATASETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cubic/mpoly.hpp"
#include "cubic/rational.hpp"

namespace cubic {

/// One of the three explicit cubic fourfolds, with its apolarity data and
/// the published reference values.
struct Dataset {
    std::string name;                 // thm1 | thm2 | thm3
    MPolyQ f;                         // cubic over Q (y_0..y_5)
    std::optional<MPolyQ> g;          // plane sextic (thm1 only)
    std::vector<MPolyQ> subst_images; // good-reduction change of variables
    MPolyQ f_good;                    // f after the substitution
    MPolyF2 f_mod2;                   // reduction modulo 2
    std::vector<MPolyQ> ideal;        // apolar ideal generators
    std::vector<long long> expected_counts;  // #X(F_{2^m}), m = 1..11
    std::vector<Rat> expected_charpoly;      // 23 coefficients, ascending
};

std::vector<std::string> dataset_names();

/// Loads and validates a dataset.  Files are read from data_dir (default:
/// the directory the project ships with); every polynomial is checked
/// against a frozen checksum so a silent transcription error cannot slip
/// through.
Dataset load_dataset(const std::string& name, const std::string& data_dir = "");

std::string default_data_dir();

} // namespace cubic

#endif
