// Left-invariant forms as antisymmetrizer eigenvectors.
//
// A degree-k form is stored by its coordinates in the canonical eigenbasis
// of A^(k); the basis element "tensor" is A^(k)(pre) for the listed preimage
// tensor, and lambda is its eigenvalue. Degree-(k>4) spaces are zero.
//
// The wedge of two forms is the class product: antisymmetrize the tensor
// product of preimage representatives. The star is computed on a preimage
// representative by the reversal rule
//   (w_{a1} (x) ... (x) w_{ak})^* -> (-1)^(k(k-1)/2) w_{ak}* (x) ... (x) w_{a1}*
// with conjugated coefficients, then re-antisymmetrized.
#pragma once

#include "exterior.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsu2 {

struct BasisForm {
    std::string name;
    std::vector<ScalarQ> pre;    // preimage tensor (dimension 4^k)
    std::vector<ScalarQ> tensor; // A^(k)(pre)
    ScalarQ lambda;              // eigenvalue of A^(k) on tensor
};

int form_space_dim(int k); // 1,4,6,4,1 for k = 0..4

const std::vector<BasisForm>& form_basis(Dir d, int k);

struct Form {
    Dir dir = Dir::Plus;
    int k = 0;
    std::vector<ScalarQ> coords; // size form_space_dim(k), empty iff k > 4

    bool is_zero() const;
    bool operator==(const Form& o) const;
};

Form zero_form(Dir d, int k);
Form unit_form(Dir d);              // degree 0, coordinate 1
Form coframe_form(Dir d, int a);    // omega_a as a 1-form
Form basis_form(Dir d, int k, int i);

Form form_add(const Form& x, const Form& y);
Form form_scale(const ScalarQ& c, const Form& x);

std::vector<ScalarQ> form_tensor(const Form& f);
std::vector<ScalarQ> form_preimage(const Form& f);

std::optional<Form> try_form_from_tensor(const std::vector<ScalarQ>& t, int k, Dir d);
Form form_from_tensor(const std::vector<ScalarQ>& t, int k, Dir d);

Form wedge(const Form& x, const Form& y);
Form star_form(const Form& f);

// Star applied to a plain tensor expression (no antisymmetrization):
// reversal, label star, conjugated coefficients, and the degree sign.
std::vector<ScalarQ> star_tensor_expr(const std::vector<ScalarQ>& t, int k);

std::string form_str(const Form& f);

} // namespace qsu2
