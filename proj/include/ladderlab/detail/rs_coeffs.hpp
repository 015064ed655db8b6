// Taylor coefficients (about p = 1/2) of the Riemann-Siegel correction
// terms C0..C3, generated offline from the exact formal power series of
//   Psi(p) = cos(2*pi*(p^2 - p - 1/16)) / cos(2*pi*p)
// at 80-digit working precision.  C1..C3 are the standard combinations of
// Psi derivatives:
//   C1 = -Psi^(3)/(96 pi^2)
//   C2 =  Psi^(6)/(18432 pi^4) + Psi^(2)/(64 pi^2)
//   C3 = -Psi^(9)/(5308416 pi^6) - Psi^(5)/(3840 pi^4) - Psi^(1)/(64 pi^2)
// Each table is indexed by the power of u = p - 1/2; alternating entries
// vanish by parity.  The order-52 truncation carries a tail below 2e-24
// for |u| <= 1/2.
#pragma once

namespace ladderlab::detail {

inline constexpr double kC0[] = {
    0.382683432365089771728, 0.0, 1.74896187231008179744, 0.0,
    2.11802520768549637318, 0.0, -0.870721667051148073919, 0.0,
    -3.47331122434651670731, 0.0, -1.66269473089993244964, 0.0,
    1.21673128891923213448, 0.0, 1.3014304161007975773, 0.0,
    0.0305110218273616724211, 0.0, -0.37558030515450952428, 0.0,
    -0.108578441656406597435, 0.0, 0.0518329029995496233758, 0.0,
    0.0299994806199022759204, 0.0, -0.00227593967061256422602, 0.0,
    -0.00438264741658033830594, 0.0, -0.000406423018372984699307, 0.0,
    0.000400609778542211392789, 0.0, 0.0000897105799138884129783, 0.0,
    -0.0000230256500272391071161, 0.0, -0.00000938000660190679248472, 0.0,
    6.32351494760910750425e-7, 0.0, 6.55102281923150166621e-7, 0.0,
    2.21052374555269725866e-8, 0.0, -3.32231617644562883503e-8, 0.0,
    -3.73491098993365608176e-9, 0.0, 1.24450670607977391952e-9, 0.0,
};

inline constexpr double kC1[] = {
    0.0, -0.05365020525675069406, 0.0, 0.110278187410814824399,
    0.0, 1.23172001543152263132, 0.0, 1.26349648627994578842,
    0.0, -1.69510899755950301845, 0.0, -2.99987119676501008896,
    0.0, -0.108199449598992086427, 0.0, 1.94076629462127126879,
    0.0, 0.783842356150068653288, 0.0, -0.505482966790036591879,
    0.0, -0.384507234960579740513, 0.0, 0.0374726464653153206759,
    0.0, 0.0909202661097317631726, 0.0, 0.0104492375500645092182,
    0.0, -0.0125829796515834164975, 0.0, -0.00339950372115127408506,
    0.0, 0.00104109505377148912683, 0.0, 0.000501094905111848686036,
    0.0, -0.0000395635966900318155955, 0.0, -0.0000476245924535718963865,
    0.0, -0.00000185393553380851322734, 0.0, 0.00000319369180800689720405,
    0.0, 4.09078076085060663265e-7, 0.0, -1.54466243325766321284e-7,
    0.0, -3.46630749176913317223e-8, 0.0, 5.15871125880615478471e-9,
};

inline constexpr double kC2[] = {
    0.00518854283029316849378, 0.0, 0.00123786335522538984134, 0.0,
    -0.181375057251669974115, 0.0, 0.142914927485321265412, 0.0,
    1.33033917666875653251, 0.0, 0.352247235340373367753, 0.0,
    -2.42100159589195072378, 0.0, -1.67607870225381088533, 0.0,
    1.36894167233283721842, 0.0, 1.55390194302229832215, 0.0,
    -0.172216427347299805196, 0.0, -0.635906805504543098897, 0.0,
    -0.0991164987304120810542, 0.0, 0.140334800673870089507, 0.0,
    0.0478235201982729223644, 0.0, -0.017356040641479780798, 0.0,
    -0.0102250125340285918445, 0.0, 0.000927414915979488789943, 0.0,
    0.00135721943723733853453, 0.0, 0.0000641369012029388008996, 0.0,
    -0.000123008056981966298833, 0.0, -0.0000183135074047892025548, 0.0,
    0.0000078216286043226273085, 0.0, 0.00000200875424847599455035, 0.0,
    -3.35327653931857137373e-7, 0.0, -1.46160209174182309265e-7, 0.0,
};

inline constexpr double kC3[] = {
    0.0, -0.00267943218143891380854, 0.0, 0.0299537210910351496373,
    0.0, -0.042570172541828697985, 0.0, -0.289979657798038875069,
    0.0, 0.488883199923544597254, 0.0, 1.23085587639574608119,
    0.0, -0.829756070852740870418, 0.0, -2.24976353666656686652,
    0.0, 0.0784513996100547137937, 0.0, 1.74674928008688940039,
    0.0, 0.459680809797499351092, 0.0, -0.661935347103977494643,
    0.0, -0.31590441036173634579, 0.0, 0.128447925452074959885,
    0.0, 0.10073382716626152301, 0.0, -0.0095301838488252677595,
    0.0, -0.0192644216875140888984, 0.0, -0.00124646371587692917125,
    0.0, 0.00242439696411030857397, 0.0, 0.000437647697741857018276,
    0.0, -0.000207140326870017912759, 0.0, -0.0000627434450418651556053,
    0.0, 0.0000115753438145956693484, 0.0, 0.00000588385492454037978389,
    0.0, -3.12467740069633622087e-7, 0.0, -4.02406577549895950098e-7,
};

// B_{2j} / (2j (2j-1)) for j = 1..15: coefficients of the Stirling
// asymptotic series for log Gamma, used with argument promotion so the
// series is only ever evaluated at |z| >= 16.
inline constexpr long double kStirling[] = {
    0.083333333333333333333L,
    -0.0027777777777777777778L,
    0.00079365079365079365079L,
    -0.0005952380952380952381L,
    0.00084175084175084175084L,
    -0.0019175269175269175269L,
    0.0064102564102564102564L,
    -0.02955065359477124183L,
    0.17964437236883057316L,
    -1.3924322169059011164L,
    13.402864044168391994L,
    -156.84828462600201731L,
    2193.1033333333333333L,
    -36108.771253724989357L,
    691472.26885131306711L,
};

// B_{2j} / (2j)! for j = 1..20: tail weights of the Euler-Maclaurin
// correction in the oracle zeta evaluation.
inline constexpr long double kBernoulliOverFact[] = {
    0.083333333333333333333L,
    -0.0013888888888888888889L,
    0.000033068783068783068783L,
    -8.2671957671957671958e-7L,
    2.0876756987868098979e-8L,
    -5.2841901386874931848e-10L,
    1.3382536530684678833e-11L,
    -3.3896802963225828668e-13L,
    8.5860620562778445641e-15L,
    -2.174868698558061873e-16L,
    5.5090028283602295152e-18L,
    -1.3954464685812523341e-19L,
    3.5347070396294674717e-21L,
    -8.9535174270375468504e-23L,
    2.2679524523376830603e-24L,
    -5.7447906688722024453e-26L,
    1.4551724756148649019e-27L,
    -3.6859949406653101782e-29L,
    9.336734257095044672e-31L,
    -2.3650224157006299346e-32L,
};

}  // namespace ladderlab::detail
