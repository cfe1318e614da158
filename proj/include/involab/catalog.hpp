#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "involab/series.hpp"

namespace involab {

// Which transcription of a formula to evaluate.  Printed variants reproduce
// a statement as typeset; the default is the form that matches the counts.
enum class FormulaVariant { Corrected, Printed, PrintedAlt };

struct GfParams {
  int k = 0;
  int d = 0;
  FormulaVariant variant = FormulaVariant::Corrected;
};

// Generating functions for 132-avoiding involutions (I) and involutions
// containing 132 exactly once (J) that also avoid / contain once a second
// pattern.  Names: Ie_* even, Io_* odd, I_* total, likewise for J.
Series gf_catalog(std::string_view name, const GfParams& params, int order);

struct CatalogEntry {
  std::string name;
  std::string description;
  bool uses_k = false;
  bool uses_d = false;
  int k_min = 0;
};
const std::vector<CatalogEntry>& catalog_entries();
bool catalog_has(std::string_view name);

// Closed-form counts.  a and b are the formula's extra parameters (fixed
// points, rises, maxima, ...).
mpz_class closed_count(std::string_view name, int n, int a = 0, int b = 0);
std::vector<std::string> closed_count_names();

mpz_class catalan_number(long m);
mpz_class fibonacci_number(long m);  // F_0 = F_1 = 1, F_{-1} = 0
mpz_class motzkin_number(long m);
mpz_class telephone_number(long m);

}  // namespace involab
