// Generated by tests/oracles/turning_point_series.py (Taylor coefficients at z = 1, w = 1 - z).
#pragma once

namespace bte::detail {

// alpha = w^{3/2} h(w)
constexpr double kAlphaH[] = {
    0.9428090415820633658677925,
    0.4242640687119285146405066,
    0.2904188565587605903789182,
    0.2234261009999160580572112,
    0.1821754153944745131224477,
    0.1539625154198623797683179,
    0.133373758308522178115239,
    0.1176617834148007434675323,
    0.1052687194772380658226819,
    0.09524025714638822248407146,
    0.0869573819707378337529427,
    0.0800003489765365639426086,
    0.07407421797273086350179669,
    0.06896557740933121639531721,
    0.06451615449477286546594894,
    0.06060607149540205844653077,
    0.05714286184311969255290841,
    0.05405405609960788112282458,
    0.05128205217883667139015822,
    0.04878048820063919909946634,
    0.04651162808267584920469236,
    0.04444444452287049922845799,
    0.04255319152454200335428579,
    0.04081632654646508324664532,
    0.03921568628168319506878229,
    0.03773584905986223145540314,
    0.03636363636512177104807292,
    0.03508771929892499613246313,
    0.03389830508505744945833583,
    0.03278688524604504588890309};

// zeta = w G(w)
constexpr double kZetaG[] = {
    1.259921049894873164767211,
    0.3779763149684619494301632,
    0.2303855634093482358431471,
    0.1659096036496486948398219,
    0.1293138708645100890654876,
    0.1056804618885813399086924,
    0.08916997952268186978384332,
    0.07700014900618802455708873,
    0.06767055661251061819808339,
    0.06029942513243309038806373,
    0.05433449158057728807038885,
    0.04941238704223534673250881,
    0.04528439148646549348038375,
    0.04177463831774603015501399,
    0.0387553394282194296978793,
    0.03613146001418749788322895,
    0.03383089245995493125210377,
    0.03179795967273853685040029,
    0.02998900387878215848932381,
    0.02836932075197791031604684,
    0.02691098415320004256092758,
    0.02559127411466271832021873,
    0.02439152186700530640947482,
    0.02329624853000994881598535,
    0.02229251405414463030177771,
    0.0213694189839573098987251,
    0.02051771884342068729599418,
    0.01972952257408734827849845,
    0.01899805443834688702706203,
    0.01831746436042832289995593};

// b0 = sum c_k w^k
constexpr double kB0Series[] = {
    0.01799887214135533092524587,
    0.01119929822128776146459743,
    0.005940406978601430431778116,
    0.002867672451639004084455645,
    0.001233918905256727170852511,
    0.000416925067453517876473466,
    0.00003301733850859498069527774,
    -0.0001318076238578203009990106,
    -0.0001906870370050847239813946,
    -0.000201165379978691404160681,
    -0.0001914759889786438176204688,
    -0.0001748991676900574972425539,
    -0.0001573145962922746950481647,
    -0.0001410610067181901496706815,
    -0.0001268574886093616603670125,
    -0.0001147331097037591676285673,
    -0.0001044608713915616397386869,
    -0.00009574993881438698353263884,
    -0.00008832345079407664505197072,
    -0.00008194435756782786580074271};

}  // namespace bte::detail
