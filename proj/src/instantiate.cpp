// Explicit instantiations keep the header templates compiling for every
// scalar the library supports.

#include "lhsolve/heuristics.hpp"
#include "lhsolve/lemke_howson.hpp"
#include "lhsolve/tableau.hpp"
#include "lhsolve/verification.hpp"

namespace lhsolve {

template class BasicGame<long double>;
template class TableauPair<double>;
template class TableauPair<long double>;
template class ComplementaryPath<double>;
template class ComplementaryPath<long double>;

template RunResult run_lh(const Game&, Label, std::optional<std::int64_t>);
template RunResult run_nd(const Game&);
template RunResult run_capped(const Game&, const HeuristicConfig&);
template RunResult run_interleaved(const Game&, const HeuristicConfig&);
template std::vector<Equilibrium> enumerate_reachable(const Game&,
                                                      EnumerateOptions);
template VerifyReport verify_equilibrium(const Game&,
                                         const MixedProfile<double>&, double);
template std::vector<Equilibrium> solve_support_enumeration(const Game&,
                                                            double);

template BasicRunResult<long double> run_lh(const BasicGame<long double>&,
                                            Label,
                                            std::optional<std::int64_t>);

}  // namespace lhsolve
