#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "bandinv/bandmat.hpp"
#include "bandinv/spectral.hpp"
#include "bandinv/springchain.hpp"

namespace bandinv::io {

/// Malformed or structurally inconsistent document, or unreadable file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that reads back to the same double; integral values
/// keep a trailing ".0".
std::string format_double(double v);

BandMatrix parse_matrix(const std::string& text);
SpectralFunction parse_sigma(const std::string& text);
TriangularInit parse_tinit(const std::string& text);
SpringChain parse_chain(const std::string& text);

std::string dump_matrix(const BandMatrix& a);
std::string dump_sigma(const SpectralFunction& sigma);
std::string dump_tinit(const TriangularInit& t);
std::string dump_chain(const SpringChain& c);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace bandinv::io
