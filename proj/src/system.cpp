#include "densitylab/system.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "densitylab/errors.hpp"

namespace densitylab {

SystemSpec SystemSpec::atom(double Z, int n_electrons) {
    SystemSpec s;
    s.electron_count = n_electrons;
    s.nuclei = {Nucleus{Z, Vec3{}}};
    s.validate();
    return s;
}

double SystemSpec::atomic_Z() const {
    if (nuclei.size() != 1)
        throw std::invalid_argument("atomic_Z: system has " + std::to_string(nuclei.size()) +
                                    " nuclei, expected a single atom");
    return nuclei.front().charge;
}

void SystemSpec::validate() const {
    if (electron_count < 1)
        throw std::invalid_argument("electron_count must be >= 1");
    if (nuclei.empty())
        throw std::invalid_argument("at least one nucleus required");
    for (const auto& n : nuclei) {
        if (!(n.charge > 0.0))
            throw std::invalid_argument("nuclear charges must be positive");
        if (!n.position.finite())
            throw std::invalid_argument("nuclear position must be finite");
    }
    for (std::size_t i = 0; i < nuclei.size(); ++i)
        for (std::size_t j = i + 1; j < nuclei.size(); ++j)
            if (distance(nuclei[i].position, nuclei[j].position) <= kDistanceFloor)
                throw std::invalid_argument("nuclei positions must be pairwise distinct");
}

std::string SystemSpec::describe() const {
    std::ostringstream os;
    os << "N=" << electron_count << ";nuclei=";
    for (std::size_t i = 0; i < nuclei.size(); ++i) {
        if (i) os << "|";
        os << "Z" << nuclei[i].charge << "@(" << nuclei[i].position.x << ","
           << nuclei[i].position.y << "," << nuclei[i].position.z << ")";
    }
    return os.str();
}

namespace {

void check_arity(const SystemSpec& spec, const Configuration& c) {
    if (static_cast<int>(c.size()) != spec.electron_count)
        throw std::invalid_argument("configuration has " + std::to_string(c.size()) +
                                    " electrons, system expects " +
                                    std::to_string(spec.electron_count));
}

double pair_terms(const SystemSpec& spec, const Configuration& c, std::size_t first_electron,
                  double floor) {
    double v = 0.0;
    for (std::size_t j = first_electron; j < c.size(); ++j) {
        for (const auto& nuc : spec.nuclei) {
            const double d = distance(c[j], nuc.position);
            if (d < floor)
                throw SingularityError("electron-nucleus distance " + std::to_string(d) +
                                       " below floor");
            v -= nuc.charge / d;
        }
        for (std::size_t k = j + 1; k < c.size(); ++k) {
            const double d = distance(c[j], c[k]);
            if (d < floor)
                throw SingularityError("electron-electron distance " + std::to_string(d) +
                                       " below floor");
            v += 1.0 / d;
        }
    }
    return v;
}

} // namespace

double potential_V(const SystemSpec& spec, const Configuration& c, double distance_floor) {
    check_arity(spec, c);
    return pair_terms(spec, c, 0, distance_floor);
}

double ion_potential_V(const SystemSpec& spec, const Configuration& c, double distance_floor) {
    check_arity(spec, c);
    if (c.size() < 2) return 0.0;
    return pair_terms(spec, c, 1, distance_floor);
}

double min_pair_distance(const SystemSpec& spec, const Configuration& c) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (const auto& nuc : spec.nuclei) m = std::min(m, distance(c[j], nuc.position));
        for (std::size_t k = j + 1; k < c.size(); ++k) m = std::min(m, distance(c[j], c[k]));
    }
    return m;
}

} // namespace densitylab
