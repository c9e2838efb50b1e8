// Generated by tests/oracles/make_oracles.py; do not edit.
#pragma once
#include <array>

namespace oracle {

struct Bvn { double x, y, rho, p; };
inline constexpr std::array<Bvn, 8> kBvn{{
  {0.0, 0.0, 0.5, 0.3333333333333333},
  {-1.2, 0.7, 0.3, 0.10299456992224278},
  {1.5, 2.0, -0.8, 0.9104426674664694},
  {-2.5, -2.0, 0.95, 0.005974929797870771},
  {0.3, -0.4, -0.95, 0.03107937242329159},
  {-4.0, -3.5, 0.6, 3.706132279172332e-06},
  {2.2, -1.1, 0.99, 0.13566606094638264},
  {0.1, 0.1, 0.0, 0.2914140938991945},
}};

struct Bvt { double x, y, rho, nu, p; };
inline constexpr std::array<Bvt, 6> kBvt{{
  {0.0, 0.0, 0.5, 4.0, 0.3333333333333333},
  {-1.2, 0.7, 0.3, 3.0, 0.12885004908211112},
  {1.5, 2.0, -0.8, 10.0, 0.8810629141929556},
  {-2.5, -2.0, 0.9, 5.0, 0.022969960379395322},
  {-6.0, -5.0, 0.7, 2.5, 0.004512328660801185},
  {3.0, -0.5, 0.2, 30.0, 0.30994612928375675},
}};

struct TQuantile { double p, nu, x; };
inline constexpr std::array<TQuantile, 6> kTQuantile{{
  {0.975, 3.0, 3.1824463052837086},
  {0.01, 5.0, -3.3649299989072188},
  {1e-10, 4.0, -416.1751403296041},
  {0.5, 7.0, -1.433621892405118e-47},
  {0.999999, 2.5, 220.17342917570426},
  {0.3, 50.0, -0.5277604527065975},
}};

struct Biv { const char* family; double theta, delta, u, v, cdf, log_pdf, h; };
inline constexpr std::array<Biv, 145> kBivariate{{
  {"clayton", 2.0, 0.0, 0.3, 0.6, 0.2785430072655778, -0.1479064614814734, 0.8004109404183269},
  {"clayton", 2.0, 0.0, 0.05, 0.9, 0.04998534595092585, -4.578236331156929, 0.9991210147197617},
  {"clayton", 2.0, 0.0, 0.8, 0.85, 0.7167431183487258, 0.5904108538418841, 0.7191519039647738},
  {"clayton", 2.0, 0.0, 0.01, 0.02, 0.008944629702343243, 3.0666820626912674, 0.7156276263975712},
  {"clayton", 2.0, 0.0, 0.97, 0.99, 0.9608651982053577, 1.0205351573331243, 0.9720132583318276},
  {"clayton", 0.25, 0.0, 0.3, 0.6, 0.20429893001054816, -0.015614935345828501, 0.6186300993293958},
  {"clayton", 0.25, 0.0, 0.05, 0.9, 0.047553484109217364, -0.46934079237545856, 0.9392158694963277},
  {"clayton", 0.25, 0.0, 0.8, 0.85, 0.6859079438372027, 0.1397038729521441, 0.8250301259552415},
  {"clayton", 0.25, 0.0, 0.01, 0.02, 0.0018505384743349091, 1.4312171180309767, 0.12137315706341414},
  {"clayton", 0.25, 0.0, 0.97, 0.99, 0.9603731254934897, 0.2131303840198469, 0.9876096625390715},
  {"frank", 5.0, 0.0, 0.3, 0.6, 0.2718910789967946, -0.1648905481484651, 0.8312264348145122},
  {"frank", 5.0, 0.0, 0.05, 0.9, 0.04975017389753264, -2.636299599141085, 0.9943564417139777},
  {"frank", 5.0, 0.0, 0.8, 0.85, 0.7318315298457092, 0.6845139603406807, 0.7057822284733459},
  {"frank", 5.0, 0.0, 0.01, 0.02, 0.000936713708651085, 1.4755657989700999, 0.09156335489736138},
  {"frank", 5.0, 0.0, 0.97, 0.99, 0.961372586409095, 1.429924525974539, 0.9574469789959266},
  {"frank", 18.0, 0.0, 0.3, 0.6, 0.2997509576603437, -2.518593751101482, 0.9955069773670489},
  {"frank", 18.0, 0.0, 0.05, 0.9, 0.04999999376376256, -12.409628451378405, 0.9999998108417112},
  {"frank", 18.0, 0.0, 0.8, 0.85, 0.7821368456389401, 1.3472982161279905, 0.7250338106125964},
  {"frank", 18.0, 0.0, 0.01, 0.02, 0.0028380330999094186, 2.4525409647228837, 0.265757123583919},
  {"frank", 18.0, 0.0, 0.97, 0.99, 0.9639561170104304, 2.3127919855016406, 0.8969188432079871},
  {"gumbel", 1.5, 0.0, 0.3, 0.6, 0.24252181521175678, 0.009061593898954615, 0.7452543580805224},
  {"gumbel", 1.5, 0.0, 0.05, 0.9, 0.049346397576488045, -1.4322299641535108, 0.9847676098412996},
  {"gumbel", 1.5, 0.0, 0.8, 0.85, 0.734921550134979, 0.5613829123367728, 0.7819406413067538},
  {"gumbel", 1.5, 0.0, 0.01, 0.02, 0.0011462106725364898, 1.3500663560202497, 0.09452603901475436},
  {"gumbel", 1.5, 0.0, 0.97, 0.99, 0.9663824441875162, 2.084878189795536, 0.9402673754281895},
  {"gumbel", 6.0, 0.0, 0.3, 0.6, 0.29964988077115023, -2.1480234088818864, 0.9940031066365946},
  {"gumbel", 6.0, 0.0, 0.05, 0.9, 0.049999999952753345, -15.650700393859962, 0.9999999974779347},
  {"gumbel", 6.0, 0.0, 0.8, 0.85, 0.7958237027983592, 1.4711858362166812, 0.8858926431268771},
  {"gumbel", 6.0, 0.0, 0.01, 0.02, 0.0077764563227988, 3.0210086103741776, 0.5961068330372207},
  {"gumbel", 6.0, 0.0, 0.97, 0.99, 0.9699936485028875, -0.42935253684044156, 0.9989192788539077},
  {"joe", 1.2, 0.0, 0.3, 0.6, 0.19766602333401875, 0.02095951724948055, 0.6490236870085427},
  {"joe", 1.2, 0.0, 0.05, 0.9, 0.04682989372553714, -0.2690363757079175, 0.9362802331352035},
  {"joe", 1.2, 0.0, 0.8, 0.85, 0.7032740448597241, 0.16194004743600046, 0.8292823353353053},
  {"joe", 1.2, 0.0, 0.01, 0.02, 0.00023928298367843385, 0.17636667853368856, 0.023904789526181865},
  {"joe", 1.2, 0.0, 0.97, 0.99, 0.9635417534198069, 1.4942792415169615, 0.9579276016739557},
  {"joe", 4.0, 0.0, 0.3, 0.6, 0.2862326183771884, -0.2769196626332958, 0.9190969045606592},
  {"joe", 4.0, 0.0, 0.05, 0.9, 0.04999459127669123, -5.36380585919861, 0.9998829217236151},
  {"joe", 4.0, 0.0, 0.8, 0.85, 0.7857919846835567, 1.3652940771199613, 0.8135100406896016},
  {"joe", 4.0, 0.0, 0.01, 0.02, 0.0007656298967505721, 1.3001316499608526, 0.07549937772561718},
  {"joe", 4.0, 0.0, 0.97, 0.99, 0.9699078330899673, 1.287860948567965, 0.9908396420387781},
  {"amh", 0.7, 0.0, 0.3, 0.6, 0.22388059701492535, -0.05237247828243576, 0.6683002895967921},
  {"amh", 0.7, 0.0, 0.05, 0.9, 0.048205677557579006, -0.8634361218441579, 0.9604987708312475},
  {"amh", 0.7, 0.0, 0.8, 0.85, 0.6945863125638406, 0.28336853026479, 0.7937369123399354},
  {"amh", 0.7, 0.0, 0.01, 0.02, 0.0006233248145608676, 1.0724325984119099, 0.06099981043823238},
  {"amh", 0.7, 0.0, 0.97, 0.99, 0.9605017053581252, 0.4979794925035604, 0.9834830194965873},
  {"amh", -0.8, 0.0, 0.3, 0.6, 0.14705882352941174, 0.04344950355116862, 0.5286428296808919},
  {"amh", -0.8, 0.0, 0.05, 0.9, 0.041821561338289966, 0.4034024235206323, 0.8395406365307279},
  {"amh", -0.8, 0.0, 0.8, 0.85, 0.6640625, -0.3519222440027943, 0.90789794921875},
  {"amh", -0.8, 0.0, 0.01, 0.02, 0.00011260246824610396, -0.561220892394613, 0.011309949742762445},
  {"amh", -0.8, 0.0, 0.97, 0.99, 0.9600695833000079, -1.3327079241623898, 0.9974411707854116},
  {"nelsen_4_14", 1.6, 0.0, 0.3, 0.6, 0.2750599001131688, -0.05996292886858806, 0.8177714501996375},
  {"nelsen_4_14", 1.6, 0.0, 0.05, 0.9, 0.04996251949351825, -3.6124267830860224, 0.9984503367574812},
  {"nelsen_4_14", 1.6, 0.0, 0.8, 0.85, 0.7474916161473747, 0.7809750680998244, 0.7537006202815808},
  {"nelsen_4_14", 1.6, 0.0, 0.01, 0.02, 0.0069159797141635955, 2.7801655276281916, 0.4748220945723803},
  {"nelsen_4_14", 1.6, 0.0, 0.97, 0.99, 0.9670259227499275, 2.1858681021340445, 0.9387570123526554},
  {"nelsen_4_14", 5.0, 0.0, 0.3, 0.6, 0.2993851147851053, -1.7647022649659507, 0.9899247132596425},
  {"nelsen_4_14", 5.0, 0.0, 0.05, 0.9, 0.04999999973467873, -13.988440602205243, 0.9999999842137084},
  {"nelsen_4_14", 5.0, 0.0, 0.8, 0.85, 0.7935844142177328, 1.4959582827799065, 0.8566734853677974},
  {"nelsen_4_14", 5.0, 0.0, 0.01, 0.02, 0.008533443576165504, 3.0826426004748066, 0.6710286160234762},
  {"nelsen_4_14", 5.0, 0.0, 0.97, 0.99, 0.969977228286581, 0.4454684062126941, 0.9968854977914968},
  {"nelsen_4_19", 0.5, 0.0, 0.3, 0.6, 0.2804507923490388, -0.11968595243633869, 0.7780646381095183},
  {"nelsen_4_19", 0.5, 0.0, 0.05, 0.9, 0.049999978619473695, -9.744558515598621, 0.99999486868484},
  {"nelsen_4_19", 0.5, 0.0, 0.8, 0.85, 0.7109725289041933, 0.5491309004060951, 0.7303598476377945},
  {"nelsen_4_19", 0.5, 0.0, 0.01, 0.02, 0.009999999999997223, -17.829880456578714, 0.9999999999855566},
  {"nelsen_4_19", 0.5, 0.0, 0.97, 0.99, 0.9607308653680564, 0.8649087255871613, 0.9761132008521445},
  {"nelsen_4_19", 4.0, 0.0, 0.3, 0.6, 0.29997337347411007, -4.1215152228932785, 0.99863990153006},
  {"nelsen_4_19", 4.0, 0.0, 0.05, 0.9, 0.05, -73.93384755052963, 1.0},
  {"nelsen_4_19", 4.0, 0.0, 0.8, 0.85, 0.7518610626580535, 0.9719607329071913, 0.6413036481859967},
  {"nelsen_4_19", 4.0, 0.0, 0.01, 0.02, 0.01, -190.78467208651278, 1.0},
  {"nelsen_4_19", 4.0, 0.0, 0.97, 0.99, 0.9616547787520756, 1.6268366535631493, 0.9483168789963045},
  {"bb1", 0.5, 1.5, 0.3, 0.6, 0.2664653658813221, -0.019467343210262243, 0.7857419749304634},
  {"bb1", 0.5, 1.5, 0.05, 0.9, 0.04989953705737684, -2.826172724988331, 0.9963422437079952},
  {"bb1", 0.5, 1.5, 0.8, 0.85, 0.7406538800018561, 0.6874130468248991, 0.7604723536751445},
  {"bb1", 0.5, 1.5, 0.01, 0.02, 0.00584959290405918, 2.5736542798020716, 0.3862500920725778},
  {"bb1", 0.5, 1.5, 0.97, 0.99, 0.9664396813251579, 2.110122898166777, 0.9389768003816384},
  {"bb1", 2.0, 3.0, 0.3, 0.6, 0.2997534379094425, -2.3625597590484615, 0.9939379908545988},
  {"bb1", 2.0, 3.0, 0.05, 0.9, 0.04999999999831105, -18.605984909054033, 0.9999999997632073},
  {"bb1", 2.0, 3.0, 0.8, 0.85, 0.7864552504762219, 1.4259121241361719, 0.7901892671671821},
  {"bb1", 2.0, 3.0, 0.01, 0.02, 0.009974218627833674, 1.664945651295572, 0.9820910122951962},
  {"bb1", 2.0, 3.0, 0.97, 0.99, 0.9696810055952388, 1.9128571931907914, 0.9771329594831332},
  {"bb2", 0.5, 1.5, 0.3, 0.6, 0.2701747964089328, -0.06230646062645473, 0.7376582957370947},
  {"bb2", 0.5, 1.5, 0.05, 0.9, 0.049993108382656935, -4.888219115059918, 0.999331109495724},
  {"bb2", 0.5, 1.5, 0.8, 0.85, 0.7065682414049479, 0.49110379421542505, 0.745479777677067},
  {"bb2", 0.5, 1.5, 0.01, 0.02, 0.009983644675577321, 1.3421209226834108, 0.9853711885607961},
  {"bb2", 0.5, 1.5, 0.97, 0.99, 0.9606605801420095, 0.7679268299963765, 0.9783402436055055},
  {"bb2", 2.0, 2.5, 0.3, 0.6, 0.2999999999952196, -17.638826101302037, 0.9999999990669423},
  {"bb2", 2.0, 2.5, 0.05, 0.9, 0.05, -994.9865619113822, 1.0},
  {"bb2", 2.0, 2.5, 0.8, 0.85, 0.767940142091609, 1.165270336265723, 0.634027396915352},
  {"bb2", 2.0, 2.5, 0.01, 0.02, 0.01, -18736.65443307308, 1.0},
  {"bb2", 2.0, 2.5, 0.97, 0.99, 0.962148508230625, 1.8636105272304373, 0.9343320062318251},
  {"bb6", 1.5, 1.2, 0.3, 0.6, 0.24373450289261175, 0.017384107554802002, 0.7642921551319078},
  {"bb6", 1.5, 1.2, 0.05, 0.9, 0.04944022369469271, -1.5078094593909517, 0.9878136242255339},
  {"bb6", 1.5, 1.2, 0.8, 0.85, 0.7454405193386872, 0.6605767311329315, 0.7858159848442128},
  {"bb6", 1.5, 1.2, 0.01, 0.02, 0.0006871066122320813, 1.0227733727416828, 0.06211720169880914},
  {"bb6", 1.5, 1.2, 0.97, 0.99, 0.9677715392629915, 2.224223856767709, 0.9436743669872711},
  {"bb6", 3.0, 2.0, 0.3, 0.6, 0.2977006506805121, -1.024581219918911, 0.97630748121838},
  {"bb6", 3.0, 2.0, 0.05, 0.9, 0.049999986462265826, -10.594258426724785, 0.9999995825507993},
  {"bb6", 3.0, 2.0, 0.8, 0.85, 0.7945121379505985, 1.48152122387226, 0.8725186682398441},
  {"bb6", 3.0, 2.0, 0.01, 0.02, 0.003657325972231852, 2.3691616425176587, 0.2829675228993121},
  {"bb6", 3.0, 2.0, 0.97, 0.99, 0.9699931454770169, -0.37959341066286717, 0.9988583344241067},
  {"mv_clayton", 1.5, 0.0, 0.3, 0.6, 0.26726519427820644, -0.07476870396943941, 0.7491225576487832},
  {"mv_clayton", 1.5, 0.0, 0.05, 0.9, 0.049936293941434826, -3.319006123527488, 0.9968177402716899},
  {"mv_clayton", 1.5, 0.0, 0.8, 0.85, 0.7094114538362458, 0.5071685700445713, 0.7404922589627537},
  {"mv_clayton", 1.5, 0.0, 0.01, 0.02, 0.008176429975453148, 2.9832750826111205, 0.6045180938747786},
  {"mv_clayton", 1.5, 0.0, 0.97, 0.99, 0.9607280419787634, 0.8573089706932023, 0.9762742448215358},
  {"mv_frank", 3.0, 0.0, 0.3, 0.6, 0.24555377219010935, -0.07699589724853258, 0.7460586439585347},
  {"mv_frank", 3.0, 0.0, 0.05, 0.9, 0.04901259754955859, -1.4062429450918372, 0.9787652999211613},
  {"mv_frank", 3.0, 0.0, 0.8, 0.85, 0.7129400292432007, 0.47732164507001507, 0.7472097335035898},
  {"mv_frank", 3.0, 0.0, 0.01, 0.02, 0.0006043132348676922, 1.0633073490200173, 0.0595833801338945},
  {"mv_frank", 3.0, 0.0, 0.97, 0.99, 0.9608935291114882, 1.03504264427974, 0.9714977038795818},
  {"mv_gumbel", 2.5, 0.0, 0.3, 0.6, 0.28405945926662945, -0.17812059884050319, 0.8859231987276824},
  {"mv_gumbel", 2.5, 0.0, 0.05, 0.9, 0.04998610432521471, -4.51062090493449, 0.9995829672715922},
  {"mv_gumbel", 2.5, 0.0, 0.8, 0.85, 0.7717523487945662, 1.118312137521996, 0.7710535736686246},
  {"mv_gumbel", 2.5, 0.0, 0.01, 0.02, 0.0035278833696262913, 2.2491498315665424, 0.2598061728512139},
  {"mv_gumbel", 2.5, 0.0, 0.97, 0.99, 0.9692745903091373, 2.1664932843842277, 0.9635361746217478},
  {"mv_joe", 2.0, 0.0, 0.3, 0.6, 0.24395767314256803, 0.018102282278917296, 0.7777342340660777},
  {"mv_joe", 2.0, 0.0, 0.05, 0.9, 0.049486980625725464, -1.5579369650721535, 0.9894656683599493},
  {"mv_joe", 2.0, 0.0, 0.8, 0.85, 0.7518065270801829, 0.7338594193798736, 0.7876919473348092},
  {"mv_joe", 2.0, 0.0, 0.01, 0.02, 0.0003940976564814221, 0.6636825657427625, 0.03921945629581466},
  {"mv_joe", 2.0, 0.0, 0.97, 0.99, 0.9683786464552827, 2.2510392516634856, 0.9486311190815997},
  {"fgm", -0.9, 0.0, 0.3, 0.6, 0.13463999999999998, 0.06952606264861023, 0.5136},
  {"fgm", -0.9, 0.0, 0.05, 0.9, 0.0411525, 0.49956243148727997, 0.8271000000000001},
  {"fgm", -0.9, 0.0, 0.8, 0.85, 0.66164, -0.47481518624295765, 0.91885},
  {"fgm", -0.9, 0.0, 0.01, 0.02, 2.5363999999999996e-05, -1.8754889647595867, 0.0027127999999999996},
  {"fgm", -0.9, 0.0, 0.97, 0.99, 0.960040719, -1.7665596682063127, 0.9983754},
  {"fgm", 0.4, 0.0, 0.3, 0.6, 0.20015999999999998, -0.032523191705560034, 0.6384},
  {"fgm", 0.4, 0.0, 0.05, 0.9, 0.04671, -0.3396773675701613, 0.9324},
  {"fgm", 0.4, 0.0, 0.8, 0.85, 0.68816, 0.15529288440603534, 0.8194},
  {"fgm", 0.4, 0.0, 0.01, 0.02, 0.000277616, 0.31941327061323443, 0.0276832},
  {"fgm", 0.4, 0.0, 0.97, 0.99, 0.960415236, 0.3137006348503345, 0.9862776},
  {"fgm", 1.0, 0.0, 0.3, 0.6, 0.2304, -0.08338160893905104, 0.696},
  {"fgm", 1.0, 0.0, 0.05, 0.9, 0.049275000000000006, -1.2729656758128876, 0.981},
  {"fgm", 1.0, 0.0, 0.8, 0.85, 0.7004, 0.3506568716131694, 0.7735},
  {"fgm", 1.0, 0.0, 0.01, 0.02, 0.00039404, 0.6631002592076486, 0.039208},
  {"fgm", 1.0, 0.0, 0.97, 0.99, 0.96058809, 0.6529499908085322, 0.980694},
  {"gaussian", 0.5, 0.0, 0.3, 0.6, 0.24651547093638557, -0.0012593063584093274, 0.7241794622227226},
  {"gaussian", 0.5, 0.0, 0.05, 0.9, 0.04978186606222717, -1.9861217691225643, 0.9924394369055246},
  {"gaussian", 0.5, 0.0, 0.8, 0.85, 0.7204917295265649, 0.42827718947077387, 0.7614144859326474},
  {"gaussian", 0.5, 0.0, 0.01, 0.02, 0.0020602001704276176, 1.7240341411046236, 0.15189322054057744},
  {"gaussian", 0.5, 0.0, 0.97, 0.99, 0.9626627790230847, 1.569214672861243, 0.9452404561028142},
  {"gaussian", 0.85, 0.0, 0.3, 0.6, 0.29219599165047694, -0.20752312922416222, 0.9077603872182101},
  {"gaussian", 0.85, 0.0, 0.05, 0.9, 0.04999999820816598, -11.475989078884185, 0.9999998179932359},
  {"gaussian", 0.85, 0.0, 0.8, 0.85, 0.7653412792325351, 0.992340777323202, 0.728891697782222},
  {"gaussian", 0.85, 0.0, 0.01, 0.02, 0.006345809953294826, 2.739405297754556, 0.4423781218013829},
  {"gaussian", 0.85, 0.0, 0.97, 0.99, 0.9674102045188121, 2.3928451237696433, 0.9164149097467105},
}};

struct StudentBiv { double rho, nu, u, v, cdf, log_pdf, h; };
inline constexpr std::array<StudentBiv, 10> kStudentBivariate{{
  {0.6, 4.0, 0.3, 0.6, 0.25597864972111234, -0.027307654991224173, 0.7759051620230025},
  {0.6, 4.0, 0.05, 0.9, 0.048729083138777066, -1.560587321026628, 0.978327610919115},
  {0.6, 4.0, 0.8, 0.85, 0.7357201969637102, 0.6510145155697635, 0.7674285315848381},
  {0.6, 4.0, 0.01, 0.02, 0.004821621562358317, 2.395878505897402, 0.3211862533748482},
  {0.6, 4.0, 0.97, 0.99, 0.9655818284939738, 2.036428877407443, 0.9392303871723118},
  {0.3, 8.0, 0.3, 0.6, 0.21831966938061445, 0.01105322771232563, 0.6734248308121712},
  {0.3, 8.0, 0.05, 0.9, 0.047277097489033734, -0.6490882440784939, 0.9486260348397623},
  {0.3, 8.0, 0.8, 0.85, 0.705370621949324, 0.2808960923769055, 0.8023391361690964},
  {0.3, 8.0, 0.01, 0.02, 0.0018442386138846024, 1.494513561698716, 0.12540282149504353},
  {0.3, 8.0, 0.97, 0.99, 0.9622963920162644, 1.3106118869499417, 0.9597851646706663},
}};

struct Multi { const char* family; double theta; int dim; std::array<double, 5> u; double cdf, log_pdf; };
inline constexpr std::array<Multi, 16> kMultivariate{{
  {"mv_clayton", 2.0, 3, {0.2, 0.5, 0.7, 0.0, 0.0}, 0.1855647966226565, -1.1046277380267455},
  {"mv_clayton", 2.0, 3, {0.9, 0.95, 0.85, 0.0, 0.0}, 0.761015573131567, 1.7538582186763811},
  {"mv_clayton", 2.0, 5, {0.2, 0.4, 0.5, 0.6, 0.8}, 0.16762327098469879, -0.9366788470293992},
  {"mv_clayton", 2.0, 5, {0.05, 0.1, 0.2, 0.15, 0.3}, 0.041646587311895175, 1.9138347709022447},
  {"mv_frank", 6.0, 3, {0.2, 0.5, 0.7, 0.0, 0.0}, 0.17848895265898118, -1.0935194800874606},
  {"mv_frank", 6.0, 3, {0.9, 0.95, 0.85, 0.0, 0.0}, 0.7852832516462428, 2.212223432220471},
  {"mv_frank", 6.0, 5, {0.2, 0.4, 0.5, 0.6, 0.8}, 0.14789250030737436, -0.9455757875951686},
  {"mv_frank", 6.0, 5, {0.05, 0.1, 0.2, 0.15, 0.3}, 0.006956842084936909, 2.96967610884097},
  {"mv_gumbel", 2.0, 3, {0.2, 0.5, 0.7, 0.0, 0.0}, 0.167246883792549, -0.5090714531086824},
  {"mv_gumbel", 2.0, 3, {0.9, 0.95, 0.85, 0.0, 0.0}, 0.8184358319473398, 2.411799879956208},
  {"mv_gumbel", 2.0, 5, {0.2, 0.4, 0.5, 0.6, 0.8}, 0.12815385006871016, -0.30982296411270216},
  {"mv_gumbel", 2.0, 5, {0.05, 0.1, 0.2, 0.15, 0.3}, 0.009266320206326409, 2.703816142994775},
  {"mv_joe", 2.5, 3, {0.2, 0.5, 0.7, 0.0, 0.0}, 0.15037981810484943, -0.3387871881455036},
  {"mv_joe", 2.5, 3, {0.9, 0.95, 0.85, 0.0, 0.0}, 0.8272622497409994, 2.410952484074718},
  {"mv_joe", 2.5, 5, {0.2, 0.4, 0.5, 0.6, 0.8}, 0.09649525595390032, -0.2771339957245875},
  {"mv_joe", 2.5, 5, {0.05, 0.1, 0.2, 0.15, 0.3}, 0.000939675590641514, 2.339173081327538},
}};

struct Deriv { const char* family; double theta, delta, t; int k; double value; };
inline constexpr std::array<Deriv, 120> kDerivatives{{
  {"clayton", 2.0, 0.0, 0.05, 1, -0.4647143204516825},
  {"clayton", 2.0, 0.0, 0.05, 2, 0.6638776006452607},
  {"clayton", 2.0, 0.0, 0.05, 5, -22.58087077024696},
  {"clayton", 2.0, 0.0, 0.05, 10, 383066.37372836896},
  {"clayton", 2.0, 0.0, 1.0, 1, -0.1767766952966369},
  {"clayton", 2.0, 0.0, 1.0, 2, 0.13258252147247765},
  {"clayton", 2.0, 0.0, 1.0, 5, -0.652554597872351},
  {"clayton", 2.0, 0.0, 1.0, 10, 441.51627423524445},
  {"clayton", 2.0, 0.0, 7.5, 1, -0.020176304134412803},
  {"clayton", 2.0, 0.0, 7.5, 2, 0.0035605242590140244},
  {"clayton", 2.0, 0.0, 7.5, 5, -0.00022828519063493134},
  {"clayton", 2.0, 0.0, 7.5, 10, 0.00011139429537872663},
  {"frank", 8.0, 0.0, 0.05, 1, -2.4213601833442255},
  {"frank", 8.0, 0.0, 0.05, 2, 49.32524128322247},
  {"frank", 8.0, 0.0, 0.05, 5, -9284285.869072184},
  {"frank", 8.0, 0.0, 0.05, 10, 4.3443773905487776e+17},
  {"frank", 8.0, 0.0, 1.0, 1, -0.07270848944646767},
  {"frank", 8.0, 0.0, 1.0, 2, 0.11500068494716446},
  {"frank", 8.0, 0.0, 1.0, 5, -2.995388991167456},
  {"frank", 8.0, 0.0, 1.0, 10, 45208.08909982039},
  {"frank", 8.0, 0.0, 7.5, 1, -6.91505871552484e-05},
  {"frank", 8.0, 0.0, 7.5, 2, 6.918884158487972e-05},
  {"frank", 8.0, 0.0, 7.5, 5, -6.972546242881449e-05},
  {"frank", 8.0, 0.0, 7.5, 10, 8.909589577601303e-05},
  {"gumbel", 3.0, 0.0, 0.05, 1, -1.6991691741380819},
  {"gumbel", 3.0, 0.0, 0.05, 2, 26.8287841612034},
  {"gumbel", 3.0, 0.0, 0.05, 5, -3771822.113265968},
  {"gumbel", 3.0, 0.0, 0.05, 10, 1.457547175324389e+17},
  {"gumbel", 3.0, 0.0, 1.0, 1, -0.12262648039048077},
  {"gumbel", 3.0, 0.0, 1.0, 2, 0.12262648039048077},
  {"gumbel", 3.0, 0.0, 1.0, 5, -2.5145998015875133},
  {"gumbel", 3.0, 0.0, 1.0, 10, 32351.841077276866},
  {"gumbel", 3.0, 0.0, 7.5, 1, -0.012285755346727281},
  {"gumbel", 3.0, 0.0, 7.5, 2, 0.0021608917209139803},
  {"gumbel", 3.0, 0.0, 7.5, 5, -0.00013576691801320915},
  {"gumbel", 3.0, 0.0, 7.5, 10, 8.27245268556092e-05},
  {"joe", 2.0, 0.0, 0.05, 1, -2.153656023403295},
  {"joe", 2.0, 0.0, 0.05, 2, 23.15628884802933},
  {"joe", 2.0, 0.0, 0.05, 5, -2360582.6791775734},
  {"joe", 2.0, 0.0, 0.05, 10, 7.722418055099856e+16},
  {"joe", 2.0, 0.0, 1.0, 1, -0.23135322868823557},
  {"joe", 2.0, 0.0, 1.0, 2, 0.2986743237660183},
  {"joe", 2.0, 0.0, 1.0, 5, -3.7396155210722286},
  {"joe", 2.0, 0.0, 1.0, 10, 35248.68866455313},
  {"joe", 2.0, 0.0, 7.5, 1, -0.0002766186923917567},
  {"joe", 2.0, 0.0, 7.5, 2, 0.0002766952314619464},
  {"joe", 2.0, 0.0, 7.5, 5, -0.0002777683676733703},
  {"joe", 2.0, 0.0, 7.5, 10, 0.0003163259343390128},
  {"amh", 0.6, 0.0, 0.05, 1, -2.064903113763419},
  {"amh", 0.6, 0.0, 0.05, 2, 7.555801503700169},
  {"amh", 0.6, 0.0, 0.05, 5, -2571.1210394630616},
  {"amh", 0.6, 0.0, 0.05, 10, 1401410752.222721},
  {"amh", 0.6, 0.0, 1.0, 1, -0.2423187343094738},
  {"amh", 0.6, 0.0, 1.0, 2, 0.3795915359096743},
  {"amh", 0.6, 0.0, 1.0, 5, -6.726356770351424},
  {"amh", 0.6, 0.0, 1.0, 10, 25841.276406563124},
  {"amh", 0.6, 0.0, 7.5, 1, -0.00022138065429531796},
  {"amh", 0.6, 0.0, 7.5, 2, 0.00022152763368621286},
  {"amh", 0.6, 0.0, 7.5, 5, -0.00022358900645721552},
  {"amh", 0.6, 0.0, 7.5, 10, 0.0002978594366015944},
  {"nelsen_4_14", 2.0, 0.0, 0.05, 1, -2.441121269280672},
  {"nelsen_4_14", 2.0, 0.0, 0.05, 2, 37.79422047635982},
  {"nelsen_4_14", 2.0, 0.0, 0.05, 5, -4507799.690958144},
  {"nelsen_4_14", 2.0, 0.0, 0.05, 10, 1.5145335849753942e+17},
  {"nelsen_4_14", 2.0, 0.0, 1.0, 1, -0.125},
  {"nelsen_4_14", 2.0, 0.0, 1.0, 2, 0.15625},
  {"nelsen_4_14", 2.0, 0.0, 1.0, 5, -3.8671875},
  {"nelsen_4_14", 2.0, 0.0, 1.0, 10, 50860.07995605469},
  {"nelsen_4_14", 2.0, 0.0, 7.5, 1, -0.0069877588193077746},
  {"nelsen_4_14", 2.0, 0.0, 7.5, 2, 0.001489586756757102},
  {"nelsen_4_14", 2.0, 0.0, 7.5, 5, -0.00013319756975850897},
  {"nelsen_4_14", 2.0, 0.0, 7.5, 10, 0.00010315319408141701},
  {"nelsen_4_19", 1.0, 0.0, 0.05, 1, -0.34841802038721675},
  {"nelsen_4_19", 1.0, 0.0, 0.05, 2, 0.3730762824041125},
  {"nelsen_4_19", 1.0, 0.0, 0.05, 5, -3.9378077771817566},
  {"nelsen_4_19", 1.0, 0.0, 0.05, 10, 6866.928796829496},
  {"nelsen_4_19", 1.0, 0.0, 1.0, 1, -0.15593914429365097},
  {"nelsen_4_19", 1.0, 0.0, 1.0, 2, 0.10580770794776172},
  {"nelsen_4_19", 1.0, 0.0, 1.0, 5, -0.3003931281747812},
  {"nelsen_4_19", 1.0, 0.0, 1.0, 10, 60.664631663474765},
  {"nelsen_4_19", 1.0, 0.0, 7.5, 1, -0.01811687060117582},
  {"nelsen_4_19", 1.0, 0.0, 7.5, 2, 0.0032986743507951856},
  {"nelsen_4_19", 1.0, 0.0, 7.5, 5, -0.00021458569749619713},
  {"nelsen_4_19", 1.0, 0.0, 7.5, 10, 9.144892449689958e-05},
  {"bb1", 1.0, 2.0, 0.05, 1, -1.4934862896119436},
  {"bb1", 1.0, 2.0, 0.05, 2, 20.393375995551587},
  {"bb1", 1.0, 2.0, 0.05, 5, -2299841.818441923},
  {"bb1", 1.0, 2.0, 0.05, 10, 7.63847700293691e+16},
  {"bb1", 1.0, 2.0, 1.0, 1, -0.125},
  {"bb1", 1.0, 2.0, 1.0, 2, 0.125},
  {"bb1", 1.0, 2.0, 1.0, 5, -2.4609375},
  {"bb1", 1.0, 2.0, 1.0, 10, 29062.90283203125},
  {"bb1", 1.0, 2.0, 7.5, 1, -0.013062262239005223},
  {"bb1", 1.0, 2.0, 7.5, 2, 0.0021466018598471927},
  {"bb1", 1.0, 2.0, 7.5, 5, -0.00013741985218868784},
  {"bb1", 1.0, 2.0, 7.5, 10, 8.557635962439841e-05},
  {"bb2", 1.0, 2.0, 0.05, 1, -0.4537804020701458},
  {"bb2", 1.0, 2.0, 0.05, 2, 0.8540518254211339},
  {"bb2", 1.0, 2.0, 0.05, 5, -58.820030684505426},
  {"bb2", 1.0, 2.0, 0.05, 10, 2659209.431332171},
  {"bb2", 1.0, 2.0, 1.0, 1, -0.13787318981149435},
  {"bb2", 1.0, 2.0, 1.0, 2, 0.12013067401390362},
  {"bb2", 1.0, 2.0, 1.0, 5, -0.9017967381057154},
  {"bb2", 1.0, 2.0, 1.0, 10, 1100.2261678680495},
  {"bb2", 1.0, 2.0, 7.5, 1, -0.01372765975353305},
  {"bb2", 1.0, 2.0, 7.5, 2, 0.002395208642112655},
  {"bb2", 1.0, 2.0, 7.5, 5, -0.00016882380230104777},
  {"bb2", 1.0, 2.0, 7.5, 10, 9.914929246169251e-05},
  {"bb6", 2.0, 1.5, 0.05, 1, -2.2174728804785246},
  {"bb6", 2.0, 1.5, 0.05, 2, 32.598564168205364},
  {"bb6", 2.0, 1.5, 0.05, 5, -4267901.829409845},
  {"bb6", 2.0, 1.5, 0.05, 10, 1.6001498705172787e+17},
  {"bb6", 2.0, 1.5, 1.0, 1, -0.15423548579215704},
  {"bb6", 2.0, 1.5, 1.0, 2, 0.18415597249339383},
  {"bb6", 2.0, 1.5, 1.0, 5, -3.5526907144899385},
  {"bb6", 2.0, 1.5, 1.0, 10, 42190.566749285164},
  {"bb6", 2.0, 1.5, 7.5, 1, -0.003731904537253675},
  {"bb6", 2.0, 1.5, 7.5, 2, 0.0014509623757911895},
  {"bb6", 2.0, 1.5, 7.5, 5, -0.00020277783244407367},
  {"bb6", 2.0, 1.5, 7.5, 10, 0.00013368619980230534},
}};

struct Spearman { const char* family; double theta, rho; };
inline constexpr std::array<Spearman, 5> kSpearman{{
  {"clayton", 2.0, 0.6822338332806562},
  {"gumbel", 2.0, 0.6822338332806562},
  {"joe", 3.0, 0.7000837491436501},
  {"nelsen_4_19", 1.0, 0.7765060488700769},
  {"nelsen_4_19", 5.0, 0.9476084171056113},
}};

struct MutualInfo { const char* family; double theta, mi; };
inline constexpr std::array<MutualInfo, 6> kMutualInfo{{
  {"fgm", 0.5, 0.014108815011261938},
  {"fgm", -1.0, 0.05999745562795795},
  {"clayton", 2.0, 0.4319456219978369},
  {"frank", 5.0, 0.2579510572836393},
  {"amh", 0.9, 0.10658764974385099},
  {"amh", -0.9, 0.03334451815716129},
}};

}  // namespace oracle
