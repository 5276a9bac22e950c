/**
 * @file json_io.hpp
 * @brief File formats: algebras, representations, cocycles, deformations.
 *
 * Files carry every rational as an exact "p" or "p/q" string and index basis
 * vectors 1-based; the in-memory API stays 0-based throughout. Bracket and
 * gamma tables are sparse with only i < j entries allowed, omitted entries are
 * zero. Emitters produce the same shape the loaders accept, so any emitted
 * file can be fed back in.
 */
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "invder/cochain.hpp"
#include "invder/deformation.hpp"
#include "invder/extension.hpp"
#include "invder/lie_algebra.hpp"
#include "invder/representation.hpp"

namespace invder {

using OrderedJson = nlohmann::ordered_json;

/** Algebra file content before mathematical validation. */
struct RawAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<Rational> constants;  // dense, mirror entries filled in
    Matrix delta;
};

/** @throws InputError on unreadable files, malformed JSON, or bad shapes. */
RawAlgebra load_raw_algebra(const std::string& path);

/** Raw load followed by full validation. @throws CheckError naming the first
 *  violated axiom. */
InvDerStructure load_structure(const std::string& path);

Representation load_representation(const std::string& path, const InvDerStructure& base);
ExtensionCocycle load_cocycle(const std::string& path, std::size_t base_dim);
Deformation load_deformation(const std::string& path, const InvDerStructure& base);
/** A bare JSON array of rows of rational strings. */
Matrix load_matrix_file(const std::string& path);

OrderedJson vector_json(const Vector& v);
OrderedJson matrix_json(const Matrix& m);
OrderedJson algebra_json(const LieAlgebra& L, const Matrix& delta);
OrderedJson cocycle_json(const ExtensionCocycle& e);
OrderedJson deformation_json(const Deformation& d);

/** Canonical rendering used for every document: two-space indent, newline. */
std::string render(const OrderedJson& doc);

}  // namespace invder
