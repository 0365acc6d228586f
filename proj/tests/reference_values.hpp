#pragma once

// 50-digit mpmath reference values; regenerate with gen_reference_values.py

namespace refvals {

struct Erfcx { double x; double value; };
inline constexpr Erfcx erfcx_table[] = {
    {0.0001, 0.99988717208253825},
    {0.01, 0.98881546104634251},
    {0.1, 0.89645697996912664},
    {0.5, 0.61569034419292587},
    {1.0, 0.42758357615580700},
    {2.0, 0.25539567631050574},
    {5.0, 0.11070463773306863},
    {7.9, 0.070857477367397131},
    {8.1, 0.069133920177343152},
    {12.0, 0.046854221014893763},
    {26.0, 0.021683584850562907},
    {27.5, 0.020502447384614798},
    {100.0, 0.0056416137829894329},
    {10000.0, 5.6418958072680841e-5},
    {-0.1, 1.1236433541992095},
    {-0.5, 1.9523604891825571},
    {-1.0, 5.0089800807622835},
    {-3.0, 16205.988853999587},
    {-5.0, 144009798674.66104},
    {-10.0, 5.3762342836322709e+43},
};

struct FaddeevaRe { double x; double y; double value; };
inline constexpr FaddeevaRe faddeeva_table[] = {
    {0.0, 1e-08, 0.99999998871620843},
    {0.0, 0.001, 0.99887262008115141},
    {0.0, 0.1, 0.89645697996912664},
    {0.0, 1.0, 0.42758357615580700},
    {0.0, 5.0, 0.11070463773306863},
    {0.0, 20.0, 0.028174348741051319},
    {0.3, 1e-08, 0.91393117590093069},
    {0.3, 0.001, 0.91299490443298320},
    {0.3, 0.1, 0.82724600691453055},
    {0.3, 1.0, 0.41398945812456870},
    {0.3, 5.0, 0.11034209112980742},
    {0.3, 20.0, 0.028168050172061931},
    {1.0, 1e-08, 0.36787944203080473},
    {1.0, 0.001, 0.36796500994105385},
    {1.0, 0.1, 0.37317014831126741},
    {1.0, 1.0, 0.30474420525691259},
    {1.0, 5.0, 0.10679773839806537},
    {1.0, 20.0, 0.028104521704702714},
    {3.0, 1e-08, 0.00012341058973403064},
    {3.0, 0.001, 0.00020197242455732031},
    {3.0, 0.1, 0.0079426809987699907},
    {3.0, 1.0, 0.065317777289046967},
    {3.0, 5.0, 0.082987737976901724},
    {3.0, 20.0, 0.027558065880778085},
    {10.0, 1e-08, 5.7287175622393079e-11},
    {10.0, 0.001, 5.7287175028417533e-6},
    {10.0, 0.1, 0.00057281236496106985},
    {10.0, 1.0, 0.0056699425669021785},
    {10.0, 5.0, 0.022767948359820292},
    {10.0, 20.0, 0.022563018746209280},
    {50.0, 1e-08, 2.2581137451456371e-12},
    {50.0, 0.001, 2.2581137442411245e-7},
    {50.0, 0.1, 2.2581047000564891e-5},
    {50.0, 1.0, 0.00022572095950627498},
    {50.0, 5.0, 0.0011178626541078893},
    {50.0, 20.0, 0.0038926059685400575},
    {-2.5, 1e-08, 0.0019304554385872667},
    {-2.5, 0.001, 0.0020606678557085471},
    {-2.5, 0.1, 0.014698406828789557},
    {-2.5, 1.0, 0.093750743405078061},
    {-2.5, 5.0, 0.089934566356534833},
    {-2.5, 20.0, 0.027743508576778109},
};

struct HermiteFn { int n; double x; double value; };
inline constexpr HermiteFn hermite_table[] = {
    {0, 0.0, 0.75112554446494248},
    {0, 0.7, 0.58790937244210464},
    {0, 3.2, 0.0044887434507462985},
    {0, 11.5, 1.4387651707074614e-29},
    {0, 25.0, 1.4410761714149424e-136},
    {1, 0.0, 0.0},
    {1, 0.7, 0.58200058556771563},
    {1, 3.2, 0.020313733971388233},
    {1, 11.5, 2.3399294001072132e-28},
    {1, 25.0, 5.0949736650692665e-135},
    {2, 0.0, -0.53112596601359846},
    {2, 0.7, -0.0083142940795388469},
    {2, 3.2, 0.061829927775412937},
    {2, 11.5, 2.6807452040358725e-27},
    {2, 25.0, 1.2727244215343028e-133},
    {5, 0.0, 0.0},
    {5, 0.7, 0.32729676349851073},
    {5, 3.2, 0.42582241624213851},
    {5, 11.5, 1.4382101789744409e-24},
    {5, 25.0, 7.2092024486209444e-130},
    {17, 0.0, 0.0},
    {17, 0.7, -0.27533759774003207},
    {17, 3.2, -0.27570003946519948},
    {17, 11.5, 1.7189722271547628e-16},
    {17, 25.0, 1.4422432977202226e-117},
    {40, 0.0, 0.26595645515231674},
    {40, 0.7, 0.26634481625078473},
    {40, 3.2, -0.27393153938648331},
    {40, 11.5, 1.3122090246071868e-6},
    {40, 25.0, 7.2654922791575260e-99},
    {120, 0.0, 0.20250458755661858},
    {120, 0.7, -0.026724585276293213},
    {120, 3.2, 0.12041244433637629},
    {120, 11.5, -0.23819563226683696},
    {120, 25.0, 6.2830332295214806e-53},
    {500, 0.0, 0.14185070152143182},
    {500, 0.7, -0.14018783726938038},
    {500, 3.2, 0.12200550150853477},
    {500, 11.5, -0.11561719058894935},
    {500, 25.0, 0.10487865650604180},
};

struct Laguerre { int n; double alpha; double x; double value; };
inline constexpr Laguerre laguerre_table[] = {
    {0, 0.0, 0.3, 1.0000000000000000},
    {0, 0.0, 4.2, 1.0000000000000000},
    {0, 0.0, 30.0, 1.0000000000000000},
    {0, 1.0, 0.3, 1.0000000000000000},
    {0, 1.0, 4.2, 1.0000000000000000},
    {0, 1.0, 30.0, 1.0000000000000000},
    {0, 3.5, 0.3, 1.0000000000000000},
    {0, 3.5, 4.2, 1.0000000000000000},
    {0, 3.5, 30.0, 1.0000000000000000},
    {0, 17.0, 0.3, 1.0000000000000000},
    {0, 17.0, 4.2, 1.0000000000000000},
    {0, 17.0, 30.0, 1.0000000000000000},
    {1, 0.0, 0.3, 0.70000000000000001},
    {1, 0.0, 4.2, -3.2000000000000002},
    {1, 0.0, 30.0, -29.000000000000000},
    {1, 1.0, 0.3, 1.7000000000000000},
    {1, 1.0, 4.2, -2.2000000000000002},
    {1, 1.0, 30.0, -28.000000000000000},
    {1, 3.5, 0.3, 4.2000000000000000},
    {1, 3.5, 4.2, 0.29999999999999982},
    {1, 3.5, 30.0, -25.500000000000000},
    {1, 17.0, 0.3, 17.700000000000000},
    {1, 17.0, 4.2, 13.800000000000000},
    {1, 17.0, 30.0, -12.000000000000000},
    {3, 0.0, 0.3, 0.23050000000000002},
    {3, 0.0, 4.2, 2.5120000000000001},
    {3, 0.0, 30.0, -3239.0000000000000},
    {3, 1.0, 0.3, 2.3755000000000001},
    {3, 1.0, 4.2, 1.7320000000000004},
    {3, 1.0, 30.0, -2876.0000000000000},
    {3, 3.5, 0.3, 21.738000000000000},
    {3, 3.5, 4.2, -3.2804999999999999},
    {3, 3.5, 30.0, -2084.4375000000000},
    {3, 17.0, 0.3, 1083.8955000000000},
    {3, 17.0, 4.2, 506.05199999999998},
    {3, 17.0, 30.0, -60.000000000000000},
    {10, 0.0, 0.3, -0.44902050945819418},
    {10, 0.0, 4.2, 1.7517693880480003},
    {10, 0.0, 30.0, 15129.571428571429},
    {10, 1.0, 0.3, 0.58689655408131494},
    {10, 1.0, 4.2, 0.14977955364800081},
    {10, 1.0, 30.0, -182924.71428571429},
    {10, 3.5, 0.3, 261.60918017151408},
    {10, 3.5, 4.2, -4.5518532855844249},
    {10, 3.5, 30.0, -97954.653650011335},
    {10, 17.0, 0.3, 7126243.0262355206},
    {10, 17.0, 4.2, 447178.60643817117},
    {10, 17.0, 30.0, 6177.8571428571429},
    {60, 0.0, 0.3, 0.042751731771672262},
    {60, 0.0, 4.2, 1.0598725347718193},
    {60, 0.0, 30.0, 171512.80967154481},
    {60, 1.0, 0.3, 4.5280429479112562},
    {60, 1.0, 4.2, -1.1723488850754777},
    {60, 1.0, 30.0, 401214.78216452420},
    {60, 3.5, 0.3, -3719.6889555631514},
    {60, 3.5, 4.2, 68.050496092512250},
    {60, 3.5, 30.0, -1034716.9135504979},
    {60, 17.0, 0.3, 17387921813506623.},
    {60, 17.0, 4.2, -5456941867.8593104},
    {60, 17.0, 30.0, 289606335.57179797},
};

struct Overlap { int a; int b; double sigma; double value; };
inline constexpr Overlap overlap_table[] = {
    {0, 0, 0.0, 1.0000000000000000},
    {0, 0, 0.4, 0.96078943915232321},
    {0, 0, 1.6, 0.52729242404304852},
    {0, 0, 3.3, 0.065710273227502881},
    {1, 0, 0.0, 0.0},
    {1, 0, 0.4, 0.27175229108681102},
    {1, 0, 1.6, 0.59656327793461146},
    {1, 0, 3.3, 0.15333179331620083},
    {1, 1, 0.0, -1.0000000000000000},
    {1, 1, 0.4, -0.88392628402013734},
    {1, 1, 1.6, 0.14764187873205366},
    {1, 1, 3.3, 0.29208216449625027},
    {3, 2, 0.0, 0.0},
    {3, 2, 0.4, 0.43353574124367333},
    {3, 2, 1.6, -0.0071640601573673081},
    {3, 2, 3.3, 0.13181654712294581},
    {5, 5, 0.0, -1.0000000000000000},
    {5, 5, 0.4, -0.60640722439011540},
    {5, 5, 1.6, 0.091034883183183028},
    {5, 5, 3.3, 0.24966283953499413},
    {8, 3, 0.0, 0.0},
    {8, 3, 0.4, -0.0011411267349116549},
    {8, 3, 1.6, -0.31434340423748350},
    {8, 3, 3.3, 0.26471508981464414},
    {10, 10, 0.0, 1.0000000000000000},
    {10, 10, 0.4, 0.32101089166805142},
    {10, 10, 1.6, 0.29003004219209923},
    {10, 10, 3.3, 0.029335422686512429},
    {12, 7, 0.0, 0.0},
    {12, 7, 0.4, -0.0040651603250627254},
    {12, 7, 1.6, -0.34196765757967992},
    {12, 7, 3.3, -0.21402000837922630},
};

struct PFreq { double omega_m; double gamma; double det; double value; };
inline constexpr PFreq p_freq_table[] = {
    {1.5, 0.01, 0.0, 1.4881063345127289},
    {10.0, 1.0, 0.0, 5.2315658373024674},
    {50.0, 10.0, 0.0, 3.9506694101386003},
    {10.0, 0.5, 2.0, 2.0660653642839843},
    {2.0, 3.0, -1.5, 0.41373245058302380},
};

}  // namespace refvals
