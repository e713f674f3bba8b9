#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spva/lie_superalgebra.hpp"
#include "spva/reduction.hpp"

namespace spva {

// Matrices in gl(p|q) given by row parities and row degrees; E_rc has parity
// p(r)+p(c) and degree d(c)-d(r).
struct MatrixRealization {
  std::vector<Parity> row_parity;
  std::vector<int> row_degree;
  std::vector<std::pair<std::string, Matrix>> basis;
  // Spanned subspace that is divided out (e.g. the identity for sl(n|n)).
  std::vector<Matrix> ideal;
  // The form is form_scale * str(XY).
  Rational form_scale = 1;
};

// Structure constants, form and grading read off the matrices.  Throws
// InvalidData if the span is not closed or an element is inhomogeneous.
LieSuperAlgebra realize(const std::string& name, const MatrixRealization& r);

Rational supertrace(const Matrix& m, const std::vector<Parity>& row_parity);
Matrix supercommutator(const Matrix& x, Parity px, const Matrix& y, Parity py);

struct Builtin {
  LieSuperAlgebra algebra;
  ReductionInput reduction;
  // Matrices of the basis elements, for reference and tests.
  MatrixRealization realization;
};

// Known names: "osp(2|2)" (alias "osp22"), "sl(m|n)", "osp(2n|2n)",
// "sl(n|n)/I".  Parameters: m, n for the families; for sl(n|n)/I an
// optional diagonal "A" given as a list of rationals.
Builtin builtin(const std::string& name, const std::map<std::string, std::vector<Rational>>& params = {});
std::vector<std::string> builtin_names();

}  // namespace spva
