#ifndef HWMC_IO_HPP
#define HWMC_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hwmc/oscillator.hpp"
#include "hwmc/symbolcalc.hpp"
#include "hwmc/wigner.hpp"

namespace hwmc {

// 17 significant digits, round-trip exact for doubles
std::string format_double(double v);

nlohmann::json complex_to_json(cxd v);                  // [re, im]
nlohmann::json matrix_to_json(const Mat& m);            // nested arrays of [re, im]
cxd complex_from_json(const nlohmann::json& j);
Mat matrix_from_json(const nlohmann::json& j);

// dual-bundle section as JSON: one entry per irrep label with its fiber matrix
nlohmann::json section_to_json(const DualSection& s);

// SymbolGrid CSV: columns u,v,w,re,im in rank order
void write_symbol_csv(std::ostream& os, const SymbolGrid& a);

// kernel slice CSV: order x order complex entries as re/im column pairs
void write_kernel_slice_csv(std::ostream& os, const Mat& slice);

// trajectory CSV: t, re/im of x1 and x2
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

// Wigner grid CSV: t, omega, then re/im per channel pair
void write_wigner_csv(std::ostream& os, const WignerGrid& grid);

}  // namespace hwmc

#endif
