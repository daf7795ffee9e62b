#pragma once

#include <array>

namespace mfvar {

// Stieltjes constants gamma_0..gamma_15, regenerated by tools/stieltjes_table.py.
inline constexpr std::array<double, 16> kStieltjes = {
    5.772156649015328606065121e-1,   // gamma_0
    -7.281584548367672486058638e-2,  // gamma_1
    -9.690363192872318484530386e-3,  // gamma_2
    2.053834420303345866160047e-3,   // gamma_3
    2.32537006546730005746817e-3,    // gamma_4
    7.933238173010627017533349e-4,   // gamma_5
    -2.387693454301996098724218e-4,  // gamma_6
    -5.272895670577510460740975e-4,  // gamma_7
    -3.521233538030395096020522e-4,  // gamma_8
    -3.439477441808804817791462e-5,  // gamma_9
    2.053328149090647946837223e-4,   // gamma_10
    2.701844395439035266729021e-4,   // gamma_11
    1.672729121051401933535015e-4,   // gamma_12
    -2.74638066037601588600076e-5,   // gamma_13
    -2.092092620592999458371397e-4,  // gamma_14
    -2.834686553202414466429345e-4,  // gamma_15
};

}  // namespace mfvar
