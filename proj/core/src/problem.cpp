#include "thp/problem.hpp"

#include <cmath>
#include <sstream>

#include "thp/error.hpp"

namespace thp {

double TabulatedSeries::at(double t) const {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (std::abs(times[i] - t) <= 1e-12 * std::max(1.0, std::abs(t))) return values[i];
    }
    std::ostringstream msg;
    msg << "tabulated data has no sample at t = " << t;
    throw Error(ErrorKind::Configuration, msg.str());
}

void ProblemSpec::validate() const {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::Configuration, what); };
    if (!potential) fail("potential q is not set");
    if (!(T > 0.0)) fail("final time T must be positive");
    if (!(l > 0.0)) fail("initial boundary position l must be positive");
    if (!(l <= L)) fail("initial boundary position l must not exceed L");
    if (!free_value) fail("free boundary value condition u(s(t), t) = g3(t) is missing");
    if (!stefan) fail("Stefan condition u_x(s(t), t) = -s'(t) is missing");
    if (const auto* table = std::get_if<TabulatedSeries>(&*free_value)) {
        if (table->times.size() != table->values.size() || table->times.empty())
            fail("tabulated g3 needs matching nonempty time and value columns");
    } else if (!std::get<RealFunction>(*free_value)) {
        fail("g3 function is empty");
    }
    if (initial && (!initial->gamma11 || !initial->gamma12 || !initial->g1))
        fail("initial condition is incomplete");
    if (fixed && (!fixed->gamma21 || !fixed->gamma22 || !fixed->g2))
        fail("fixed boundary condition is incomplete");
}

double ProblemSpec::free_value_at(double t) const {
    if (!free_value) throw Error(ErrorKind::Configuration, "g3 is not set");
    if (const auto* table = std::get_if<TabulatedSeries>(&*free_value)) return table->at(t);
    return std::get<RealFunction>(*free_value)(t);
}

CollocationGrid::CollocationGrid(std::vector<double> x, std::vector<double> t)
    : x_(std::move(x)), t_(std::move(t)) {
    auto check = [](const std::vector<double>& v, const char* name) {
        if (v.size() < 2) {
            throw Error(ErrorKind::Configuration,
                        std::string("collocation grid ") + name + " needs at least 2 points");
        }
        if (v.front() != 0.0)
            throw Error(ErrorKind::Configuration, std::string("collocation grid ") + name + " must start at 0");
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (!(v[i] > v[i - 1]))
                throw Error(ErrorKind::Configuration,
                            std::string("collocation grid ") + name + " must be strictly increasing");
        }
    };
    check(x_, "x");
    check(t_, "t");
}

CollocationGrid CollocationGrid::uniform(double l, double T, int nx, int nt) {
    if (nx < 1 || nt < 1) throw Error(ErrorKind::Configuration, "collocation grid sizes must be >= 1");
    std::vector<double> x(static_cast<std::size_t>(nx) + 1), t(static_cast<std::size_t>(nt) + 1);
    for (int i = 0; i <= nx; ++i) x[static_cast<std::size_t>(i)] = l * i / nx;
    for (int i = 0; i <= nt; ++i) t[static_cast<std::size_t>(i)] = T * i / nt;
    return {std::move(x), std::move(t)};
}

}  // namespace thp
