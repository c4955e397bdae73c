#ifndef HOTCARRIER_TESTS_BESSEL_REFERENCE_HPP
#define HOTCARRIER_TESTS_BESSEL_REFERENCE_HPP

// Frozen reference values for the scaled modified Bessel functions:
//   { x, e^x K0(x), e^x K1(x) }
// 100 log-spaced abscissas over [1e-6, 700], evaluated offline with a
// 50-digit arbitrary-precision library and rounded to 17 significant digits.

#include <array>

namespace hotc_test {

struct BesselRow { double x; double k0_scaled; double k1_scaled; };

inline constexpr std::array<BesselRow, 100> kBesselReference = {{
    {1.0000000000000000e-6, 13.931456005075459, 1000000.9999932843},
    {1.2284130588813377e-6, 13.725735794157567, 814059.42502250640},
    {1.5089986432302049e-6, 13.520016194634832, 662692.11935352582},
    {1.8536736391782044e-6, 13.314297332973866, 539470.28889883651},
    {2.2770769052705991e-6, 13.108579361516672, 439160.51966869366},
    {2.7971910065115067e-6, 12.902862463703191, 357502.50691304413},
    {3.4361059605841677e-6, 12.697146860329704, 291028.11365687528},
    {4.2209574336815947e-6, 12.491432817043832, 236914.07377647718},
    {5.1850792325167289e-6, 12.285720653314561, 192862.08369769137},
    {6.3694190405579738e-6, 12.080010753160112, 157001.19003263763},
    {7.8242775269088558e-6, 11.874303577968781, 127808.32741300234},
    {9.6114446903666157e-6, 11.668599681809231, 104043.63164375338},
    {1.1806824172362046e-5, 11.462899729698733, 84697.780830930426},
    {1.4503656997245380e-5, 11.257204519382023, 68949.127983066895},
    {1.7816481656951914e-5, 11.051515007271682, 56128.804444214488},
    {2.1885998730719545e-5, 10.845832339315295, 45692.312049587749},
    {2.6885046647476270e-5, 10.640157887687252, 37196.397480524267},
    {3.3025942390393779e-5, 10.434493294356502, 30280.226638299536},
    {4.0569498914222460e-5, 10.228840522758314, 24650.059484517111},
    {4.9836102258503121e-5, 10.023201919000979, 20066.774465804641},
    {6.1219318818090961e-5, 9.8175802842700830, 16335.712666620414},
    {7.5202610691962957e-5, 9.6119789603563353, 13298.410356270314},
    {9.2379869035976609e-5, 9.4064019305303280, 10825.868799139520},
    {0.00011348063750154140, 9.2008539383212426, 8813.0754869933410},
    {0.00013940109703707272, 8.9953406271277425, 7174.5441019540458},
    {0.00017124212802272468, 8.7898687039983819, 5840.6837857643058},
    {0.00021035606629374486, 8.5844461313645310, 4754.8435128167532},
    {0.00025840413885014458, 8.3790823509874958, 3870.9060370882592},
    {0.00031742701863250402, 8.1737885448865582, 3151.3292243372104},
    {0.00038993149492993764, 7.9685779385353506, 2565.5515820385748},
    {0.00047899694044105753, 7.7634661521342087, 2088.6942675505361},
    {0.00058840609680200141, 7.5584716062629358, 1700.5044468776690},
    {0.00072280573323697505, 7.3536159886601209, 1384.4951269145108},
    {0.00088790400174260071, 7.1489247892193845, 1127.2449285747318},
    {0.0010907128707736087, 6.9444279104842841, 917.82806113915161},
    {0.0013398459339482539, 6.7401603608911801, 747.35028799635636},
    {0.0016458842421510974, 6.5361630376643022, 608.57117556321119},
    {0.0020218256964654218, 6.3324836055005371, 495.59658174937384},
    {0.0024836370883199799, 6.1291774758622390, 403.62832351004278},
    {0.0030509322328142856, 5.9263088896715068, 328.76039151473100},
    {0.0037478049965510661, 5.7239521032948216, 267.81305688815490},
    {0.0046038525999040564, 5.5221926737319589, 218.19782431543403},
    {0.0056554326548869413, 5.3211288336786280, 177.80749589856534},
    {0.0069472073268870723, 5.1208729404248412, 144.92667664614319},
    {0.0085340402031041899, 4.9215529742138617, 118.15892066901826},
    {0.010483326430511530, 4.7233140516098128, 96.367423914133426},
    {0.012877855087756244, 4.5263199075930420, 78.626744613919742},
    {0.015819325360181246, 4.3307542866572693, 64.183500994655366},
    {0.019432665855139364, 4.1368221684680535, 52.424377065634519},
    {0.023871340505330672, 3.9447507382843650, 42.850077694492808},
    {0.029323866409751228, 3.7547899973195310, 35.054126844019123},
    {0.036021820434630217, 3.5672128949088319, 28.705608532337293},
    {0.044249674626578382, 3.3823148545844367, 23.535117515978448},
    {0.054356878162539065, 3.2004125621852505, 19.323322994110553},
    {0.066772698974884800, 3.0218418885335744, 15.891659579719932},
    {0.082024455397501000, 2.8469548347125548, 13.094750091237438},
    {0.10075991215792005, 2.6761154171107611, 10.814238221488848},
    {0.12377479190652546, 2.5096944540473203, 8.9537689628561871},
    {0.15204657073829599, 2.3480632766110441, 7.4349033515303171},
    {0.18677599305304787, 2.1915864621348507, 6.1937937118579902},
    {0.22943806895189401, 2.0406137758277718, 5.1784778231059499},
    {0.28184472010502340, 1.8954715980202228, 4.3466766730376352},
    {0.34622173475376625, 1.7564542019636667, 3.6640018294622892},
    {0.42530330024007715, 1.6238153186968004, 3.1024958692840335},
    {0.52244812800024114, 1.4977604688067628, 2.6394435017335624},
    {0.64178210302360488, 1.3784405447375549, 2.2564026156278841},
    {0.78837351631052428, 1.2659470838837486, 1.9384139607914920},
    {0.96844832271204732, 1.1603095801344376, 1.6733559356873974},
    {1.1896545664712069, 1.0614950453376945, 1.4514173112381333},
    {1.4613872050110470, 0.96940986563850665, 1.2646659236896701},
    {1.7951871267176688, 0.88390382042667914, 1.1066956141443645},
    {2.2052313095956511, 0.80477596652386898, 0.97233713657992039},
    {2.7089349385612921, 0.73178195897898189, 0.85742152904529373},
    {3.3276910541886054, 0.66464229876519051, 0.75858665445503580},
    {4.0877791468878881, 0.60305097449418958, 0.67311936550744378},
    {5.0214812858598957, 0.54668399788592181, 0.59882712098234757},
    {6.1684531864785474, 0.49520741038421641, 0.53393395767876103},
    {7.5774084473684471, 0.44828444457942532, 0.47699657340942662},
    {9.3081874892251619, 0.40558164086575693, 0.42683696014843565},
    {11.434299066280080, 0.36677383085873535, 0.38248858832712846},
    {14.046042292173136, 0.33154799282983365, 0.34315361652764170},
    {17.254341777305039, 0.29960605452239626, 0.30816900748786847},
    {21.195458761643340, 0.27066676396025494, 0.27697978483520333},
    {26.036778331783545, 0.24446677173208121, 0.24911797290364842},
    {31.983918513961558, 0.22076107332737361, 0.22418602865699213},
    {39.289463176746966, 0.19932295267981076, 0.20184380305306462},
    {48.263689642753421, 0.17994355304584494, 0.18179826185005403},
    {59.287746626954266, 0.16243118269136537, 0.16379535592255000},
    {72.829842188198602, 0.14661044345282512, 0.14761356210171940},
    {89.465129220250143, 0.13232125192516341, 0.13305872114358043},
    {109.90013304866163, 0.11941780681770054, 0.11995988347440213},
    {135.00275860977242, 0.10776754232036016, 0.10816593950633406},
    {165.83915166124939, 0.097250096155367767, 0.097542862875175750},
    {203.71897957448144, 0.087756312149428697, 0.087971434825039470},
    {250.25105485127350, 0.079187290337865052, 0.079345348605976316},
    {307.41166377813431, 0.071453492465079609, 0.071569616184486411},
    {377.62850223749929, 0.064473906949299403, 0.064559217427336096},
    {463.88378355434459, 0.058175274644837809, 0.058237945503118027},
    {569.84089752144081, 0.052491374818043133, 0.052537412568569632},
    {700.00000000000000, 0.047362369454613572, 0.047396187653494544},
}};

} // namespace hotc_test

#endif
