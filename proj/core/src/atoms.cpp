#include "unionbound/atoms.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace unionbound {

template <class T>
void write_atoms_debug(std::ostream& out, const AtomVector<T>& x) {
    for (const auto& [mask, value] : x.mass)
        out << mask << ' ' << scalar_to_string(value) << '\n';
}

template <class T>
AtomVector<T> read_atoms_debug(std::istream& in, int n) {
    AtomVector<T> x(n);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        unsigned long mask = 0;
        std::string value_text;
        if (!(ls >> mask >> value_text))
            throw std::runtime_error("atom debug line malformed: " + line);
        if (mask == 0 || mask >= (1ul << n))
            throw std::runtime_error("atom mask out of range: " + line);
        T value{};
        if (!scalar_from_string(value_text, value))
            throw std::runtime_error("atom value malformed: " + line);
        x.set(static_cast<SetMask>(mask), value);
    }
    return x;
}

template void write_atoms_debug<double>(std::ostream&, const AtomVector<double>&);
template void write_atoms_debug<Rational>(std::ostream&, const AtomVector<Rational>&);
template AtomVector<double> read_atoms_debug<double>(std::istream&, int);
template AtomVector<Rational> read_atoms_debug<Rational>(std::istream&, int);

}  // namespace unionbound
