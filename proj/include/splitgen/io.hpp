#ifndef SPLITGEN_IO_HPP
#define SPLITGEN_IO_HPP

#include <string>
#include <vector>

#include "splitgen/points.hpp"
#include "splitgen/poly.hpp"
#include "splitgen/split.hpp"
#include "splitgen/verify.hpp"

namespace splitgen {

/// All writers emit canonical JSON: keys sorted, two-space indent, exact
/// values as decimal strings ("a/b" for rationals), structural counts as
/// JSON integers, no floats, trailing newline.

std::string point_set_to_json(const PointSet& gamma);
PointSet point_set_from_json(const std::string& text);

std::string poly_to_json(const PolyVec& f);
PolyVec poly_from_json(const std::string& text);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

std::string report_to_json(const VerifyReport& report);

std::string sigma_to_json(const PointSet& gamma, unsigned m,
                          const std::vector<SigmaGenerator>& gens);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace splitgen

#endif
