/**
 * Complex and realization files, rational serialization and input digests.
 */
#ifndef STRESSLAB_IO_HPP
#define STRESSLAB_IO_HPP

#include <string>
#include "stresslab/realization.hpp"

namespace stresslab {

/** {"name": ..., "facets": [[label, ...], ...]} */
struct ComplexFile
{
    std::string name;
    SimplicialComplex complex;
};

std::string write_complex(const ComplexFile& f);
ComplexFile read_complex(const std::string& text);

/** {"dim": d, "coords": {label: ["num/den", ...]}} with d+1 entries per vertex. */
std::string write_realization(const Realization& nu);

/**
 * With check = false only the shape is validated, so degenerate coordinates
 * can still be inspected (degenerate_face, general_position_witness).
 */
Realization read_realization(const std::string& text, const SimplicialComplex& K, bool check = true);

/** Whole file; throws ParseError if unreadable. */
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/** 64-bit FNV-1a, as 16 hex digits. */
std::string digest(const std::string& text);

}   // namespace stresslab

#endif
