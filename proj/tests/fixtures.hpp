#pragma once

// Reference polynomials of the two conjecture proofs.

#include "mtprove/poly.hpp"

#include <string>
#include <vector>

namespace fixtures {

using mtprove::Integer;
using mtprove::PiPoly;
using mtprove::Poly;
using mtprove::Rational;

// c0 + c1*pi + c2*pi^2 + ... from decimal or "n/d" strings
inline PiPoly pp(std::initializer_list<const char*> cs) {
    std::vector<Rational> v;
    for (const char* c : cs) v.push_back(mtprove::rational_from_string(c));
    return PiPoly(v);
}

// Polynomial with the given coefficients at even powers only.
inline Poly even_poly(const std::vector<PiPoly>& by_even_power) {
    std::vector<PiPoly> c;
    for (const auto& x : by_even_power) {
        c.push_back(x);
        c.push_back(PiPoly());
    }
    c.pop_back();
    return Poly(c);
}

inline Poly dense(const std::vector<PiPoly>& c) { return Poly(c); }

inline std::vector<PiPoly> p10_coefficients() {
    return {
        pp({"-238151113200", "16629713100", "29768889150"}),
        pp({"326415889800", "-32614832250", "-40801986225"}),
        pp({"-223372028880", "24692768100", "27921503610"}),
        pp({"103210270800", "-12030783492", "-12901283850"}),
        pp({"-32212254720", "4026531840", "4026531840"}),
        pp({"8589934592", "-1073741824", "-1073741824"}),
    };
}

inline Poly P10() { return even_poly(p10_coefficients()); }
inline Poly P5() { return dense(p10_coefficients()); }

inline std::vector<PiPoly> p14_coefficients() {
    return {
        pp({"-280270311341948928000", "108604745645005209600"}),
        pp({"326982029898940416000", "-131515731413434368000"}),
        pp({"-198524461941501696000", "81120783386638195200"}),
        pp({"81238161686899875840", "-33492109086208281600"}),
        pp({"-24143557388833935360", "10002584016180806400"}),
        pp({"5469977974061251584", "-2272344207942188160"}),
        pp({"-954715629403497528", "397798178918123970"}),
        pp({"136786742224477716", "-56994475926865715"}),
    };
}

inline Poly P14() { return even_poly(p14_coefficients()); }
inline Poly P7() { return dense(p14_coefficients()); }

// P16, terms t^6 .. t^16
inline Poly P16() {
    std::vector<PiPoly> c(17);
    c[16] = pp({"536870912/1915538625", "-67108864/1915538625", "-67108864/1915538625"});
    c[14] = pp({"-134217728/127702575", "16777216/127702575", "16777216/127702575"});
    c[12] = pp({"945149/280665", "-11017201/28066500", "-945149/2245320"});
    c[10] = pp({"-309929/42525", "27409/34020", "309929/340200"});
    c[8] = pp({"20129/1890", "-1609/1512", "-20129/15120"});
    c[6] = pp({"-1049/135", "293/540", "1049/1080"});
    return Poly(c);
}

// P19, terms t^5 .. t^19
inline Poly P19() {
    std::vector<PiPoly> c(20);
    c[19] = pp({"232630513987207/39720849113088000", "-232630513987207/95330037871411200"});
    c[17] = pp({"-4747561509943/116142833664000", "4747561509943/278742800793600"});
    c[15] = pp({"612518675071/2615348736000", "-111034112797/1141243084800"});
    c[13] = pp({"-585184807/566092800", "25601647133/59779399680"});
    c[11] = pp({"277683421/79833600", "-549507467/383201280"});
    c[9] = pp({"-9870319/1161216", "34570249/9953280"});
    c[7] = pp({"14", "-473/84"});
    c[5] = pp({"-12", "93/20"});
    return Poly(c);
}

// Branch-two cubics.
inline Poly conj1_cubic() {
    return dense({PiPoly(), pp({"4", "0", "1/2"}), pp({"0", "11/8", "-35/64", "-35/64"}),
                  pp({"-35/4", "35/32", "35/32"})});
}

inline Poly conj2_cubic() {
    return dense({PiPoly(), pp({"6"}), pp({"0", "9/2", "-5/2"}), pp({"-12", "5"})});
}

} // namespace fixtures
