#include "dmgrad/geometry.hpp"

namespace dmgrad {

const char* diffraction_name(Diffraction d) {
    switch (d) {
        case Diffraction::SinglePhoton: return "single_photon";
        case Diffraction::Raman: return "raman";
        case Diffraction::Bragg: return "bragg";
    }
    return "?";
}

}  // namespace dmgrad
