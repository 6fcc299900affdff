#pragma once

#include <lvcert/localview/generate.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace lvcert {

class CatalogueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File layout:
//   LVC1 d=<d> count=<n> hash=<sha256 of body>
//   <blank line>
//   inner: <edges on 1..d>
//   mults: [c,c|c,c,c|...]
//   <blank line between records>
std::string catalogue_body(const Catalogue& cat);
std::string catalogue_hash(const Catalogue& cat);
void write_catalogue(std::ostream& out, const Catalogue& cat);
void save_catalogue(const std::string& path, const Catalogue& cat);

/// Parses, rebuilds each view's canonical representation, and checks that
/// the stored hash matches the body and that every record is canonical.
/// Throws CatalogueError on any mismatch.
Catalogue read_catalogue(std::istream& in);
Catalogue load_catalogue(const std::string& path);

}  // namespace lvcert
