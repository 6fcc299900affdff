#pragma once

#include <lvcert/potts/coefficients.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lvcert {

class CoeffFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CoeffFile {
    CaseSpec spec;
    int d = 0;
    std::string catalogue_hash;
    std::vector<CoeffRecord> records;
};

// Layout:
//   LVCOEF1 case=<name> d=<d> count=<n> catalogue=<hash>
//   view <id>
//   [Ztilde]
//   <polynomial lines>
//   [Nc]
//   ...
//   [gamma <partition label>]   (one block per partition of d)
void write_coefficients(std::ostream& out, const CoeffFile& file);
void save_coefficients(const std::string& path, const CoeffFile& file);
CoeffFile read_coefficients(std::istream& in);
CoeffFile load_coefficients(const std::string& path);

}  // namespace lvcert
