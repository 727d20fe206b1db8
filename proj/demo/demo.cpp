// Small tour of the library: exact products, binor logic, the hierarchy and
// the toy model's time spectrum.

#include <iostream>

#include "cliff/cliff.hpp"

int main() {
  using namespace cliff;

  const Signature sig = Signature::pq(3, 1);
  const auto x = parse_expression<Rational>("1/2 + e1*e2 - 3*e4", sig);
  std::cout << "x        = " << print_expression(x) << "\n";
  std::cout << "x*x      = " << print_expression(x * x) << "\n";
  std::cout << "T(x)     = " << print_expression(involution(x, FourGroup::T)) << "\n";
  std::cout << "Re(x x)  = " << norm_form(x, FourGroup::I) << "\n\n";

  const Signature three = Signature::euclidean(3);
  ParseOptions letters;
  letters.letters = true;
  const auto a = parse_expression<GF2>("a + b", three, letters);
  const auto b = parse_expression<GF2>("b*c", three, letters);
  std::cout << "a+b XOR bc   = " << print_expression(binor::binor_xor(a, b)) << "\n";
  std::cout << "a+b XAND bc  = " << print_expression(binor::binor_xand(a, b)) << "\n";
  std::cout << "sup, inf     = " << print_expression(binor::binor_sup(a, b)) << ", "
            << print_expression(binor::binor_inf(a, b)) << "\n\n";

  for (const auto &lvl : hierarchy::hierarchy_chain(6, {}))
    std::cout << "C" << lvl.n << " = Cliff(" << lvl.generators.n_plus << ", "
              << lvl.generators.n_minus << ")\n";
  std::cout << "\n";

  dirac::OctadConfig cfg;
  cfg.n = 2;
  const auto spec = dirac::time_spectrum(cfg);
  std::cout << "time eigenvalues for N = 2:";
  for (const auto &c : spec.clusters)
    std::cout << " " << c.value.real() << " (x" << c.multiplicity << ")";
  std::cout << "\n";
}
