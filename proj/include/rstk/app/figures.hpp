#pragma once

#include <string>
#include <vector>

#include "rstk/app/table.hpp"

namespace rstk::app {

// 1: phi,q,reE,imE; 2: phi,q,n,psi2; 3: mu2,q,quantity,value; 4: mu2,q,usym,bound.
// Rows are ordered curve by curve (q, then n or quantity), then by the abscissa.
Table figure_table(int id);

// names used in the quantity column of figure 3
const std::vector<std::string>& figure3_quantities();

}  // namespace rstk::app
