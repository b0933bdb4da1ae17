// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "ihopf/ihopf.hpp"
#include "ihopf/presentation.hpp"

namespace ihopf {

// In-memory form of one serialized file. Three kinds share the format:
//   presentation  full bialgebra data (G, mu required; antipode optional)
//   ialgebra      diamond algebra (F and lambda only)
//   matrix        a bare square matrix (basechange input)
// All scalars travel as exact text; the grammar lives in docs/format.md.
// Canonical files (the ones save() writes) are byte-stable: parse followed
// by serialize reproduces them exactly.
enum class FileKind { presentation, ialgebra, matrix };

struct PresentationFile {
    int format_version = 1;
    FileKind kind = FileKind::presentation;
    FieldSpec field = FieldSpec::rationals();
    unsigned dim = 0;
    std::vector<std::string> basis_labels;       // presentation/ialgebra
    StructureTensor F;                           // presentation/ialgebra
    StructureTensor G;                           // presentation
    std::vector<Scalar> lambda;                  // presentation/ialgebra
    std::vector<Scalar> mu;                      // presentation
    std::optional<Matrix> antipode;              // presentation
    std::map<std::string, Matrix> witnesses;     // presentation, by name
    std::optional<std::string> note;             // free-form provenance
    std::optional<Matrix> matrix;                // kind == matrix

    BialgebraPresentation to_presentation() const;  // requires kind presentation
    IAlgebra to_ialgebra() const;                   // requires kind ialgebra
};

PresentationFile make_file(const BialgebraPresentation& P,
                           std::map<std::string, Matrix> witnesses = {},
                           std::optional<std::string> note = std::nullopt);
PresentationFile make_file(const IAlgebra& I);
PresentationFile make_matrix_file(const Matrix& M);

std::string serialize(const PresentationFile& file);
PresentationFile parse_file(std::string_view text);  // throws ParseError

void save(const PresentationFile& file, const std::string& path);
PresentationFile load(const std::string& path);  // throws ParseError / DomainError

// Deterministic aligned multiplication grid: rows and columns are labeled by
// the basis, cell (i,j) renders sum_k T(i,j,k) label_k with "0" for zero
// cells and coefficient formatting like "d4", "-d4", "3/2*d4".
std::string render_table(const StructureTensor& T, const std::vector<std::string>& labels);

// One element rendered in the same style as a table cell.
std::string render_element(const std::vector<Scalar>& coords,
                           const std::vector<std::string>& labels);

}  // namespace ihopf
