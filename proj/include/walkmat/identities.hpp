#pragma once

#include "walkmat/certificate.hpp"
#include "walkmat/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace walkmat {

// det W(G o P_m) = +- a0(G)^floor(m/2) * (det W(G))^m, checked as
// |LHS| = |RHS| with both sides computed exactly. Requires m >= 2.
Certificate verify_main_theorem(const Graph& g, std::size_t m);

// charpoly(A(G o P_m)) equals the homogenized substitution
// S_{m-1}^n * phi(G; S_m / S_{m-1}), coefficient by coefficient. m >= 1.
Certificate verify_schwenk(const Graph& g, std::size_t m);

// Res(U_m, U_{m-1}) = (-1)^{m(m-1)/2} * 2^{m(m-1)}. m >= 1.
Certificate verify_dilcher_stolarsky(std::size_t m);

// Res_x(U_m + t*U_{m-1}, U_0 + ... + U_{m-1})
//   = (-1)^{m(m-1)/2} * t^floor(m/2) * 2^{m(m-1)},
// certified as a polynomial identity in t by integer sampling (see the
// degree-bound note in the implementation). t_override replaces the default
// sample set t = 0..m.
Certificate verify_newres(std::size_t m,
                          const std::optional<std::vector<Int>>& t_override = std::nullopt);

// Res_x(S_m - t*S_{m-1}, S_{m-1}) = (-1)^{m(m-1)/2}, constant across t.
Certificate verify_res1(std::size_t m,
                        const std::optional<std::vector<Int>>& t_override = std::nullopt);

// Res_x(S_m - t*S_{m-1}, S_0 + ... + S_{m-1}) = (-1)^{m(m-1)/2} * (-t)^floor(m/2).
Certificate verify_res2(std::size_t m,
                        const std::optional<std::vector<Int>>& t_override = std::nullopt);

// 2^floor(n/2) divides det W(G).
Certificate verify_divisibility(const Graph& g);

} // namespace walkmat
