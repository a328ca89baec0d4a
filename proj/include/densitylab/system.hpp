#ifndef DENSITYLAB_SYSTEM_HPP
#define DENSITYLAB_SYSTEM_HPP

#include <string>
#include <vector>

#include "densitylab/geometry.hpp"

namespace densitylab {

inline constexpr double kDistanceFloor = 1e-12;

struct Nucleus {
    double charge = 1.0;
    Vec3 position;
};

/// Physical system: N electrons in the field of one or more fixed nuclei.
/// An atom is the single-nucleus case with the nucleus at the origin.
struct SystemSpec {
    int electron_count = 1;
    std::vector<Nucleus> nuclei;

    static SystemSpec atom(double Z, int n_electrons);

    bool is_atom() const { return nuclei.size() == 1; }
    /// Charge of the single nucleus; throws for molecules.
    double atomic_Z() const;
    void validate() const;
    std::string describe() const;
};

/// Coulomb potential: sum of nuclear attractions and electron repulsions.
/// Throws SingularityError when any pairwise distance is below the floor.
double potential_V(const SystemSpec& spec, const Configuration& c,
                   double distance_floor = kDistanceFloor);

/// Potential of the ionized system (electron 1 removed): attraction and
/// repulsion terms among electrons 2..N only.
double ion_potential_V(const SystemSpec& spec, const Configuration& c,
                       double distance_floor = kDistanceFloor);

/// Smallest pairwise distance (electron-electron and electron-nucleus).
double min_pair_distance(const SystemSpec& spec, const Configuration& c);

/// Energy bookkeeping for Theorem-level checks: the state energy E, the
/// ground energy of the (N-1)-electron ion, and the gap eps = E0^{N-1} - E.
struct EigenEstimate {
    double energy = 0.0;
    double ion_energy = 0.0;
    double gap = 0.0;
};

} // namespace densitylab

#endif
