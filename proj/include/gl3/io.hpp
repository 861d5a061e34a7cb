#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gl3/dirichlet.hpp"
#include "gl3/hecke.hpp"
#include "gl3/measures.hpp"
#include "gl3/sign_stats.hpp"

namespace gl3::io {

struct Gl2Ingest {
  GL2FormData data;
  std::vector<std::string> warnings;
};

/// Header `p,lambda`; one row per prime. Throws ParseError naming the line.
Gl2Ingest read_gl2csv(std::istream& in);
Gl2Ingest read_gl2csv(const std::string& path);

/// Header `m,value`; rows must list m = 1, 2, 3, ... in order.
RealSequence read_seqcsv(std::istream& in);
RealSequence read_seqcsv(const std::string& path);

DirichletPolynomial read_polynomial_csv(std::istream& in);

void write_table_csv(std::ostream& out, const CoefficientTable& table);
void write_samples_csv(std::ostream& out, const std::vector<TorusPoint>& samples);
void write_density_csv(std::ostream& out, const MeasureSpec& spec, int grid);
void write_polynomial_csv(std::ostream& out, const DirichletPolynomial& poly);

/// Shortest round-trip decimal text.
std::string format_double(double x);

}  // namespace gl3::io
