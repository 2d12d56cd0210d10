// Generated by tools/dataprep/gen_k_grid.py; do not edit by hand.
#pragma once

namespace qve::oracle {

// K_{ir}(x) on the 20 x 20 cross-validation grid
struct KGridPoint { double r, x, val; };
inline constexpr KGridPoint K_GRID_400[] = {
  {0, 0.050000000000000003, 3.1142340294719899},
  {0, 0.089999999999999997, 2.5310171015949652},
  {0, 0.14999999999999999, 2.030027723044201},
  {0, 0.29999999999999999, 1.3724600605442974},
  {0, 0.59999999999999998, 0.77752209190472932},
  {0, 1, 0.42102443824070834},
  {0, 1.8, 0.14593140048982797},
  {0, 3, 0.034739504386279249},
  {0, 4.5, 0.0063998572432339747},
  {0, 6.5, 0.00072593176762933539},
  {0, 9, 5.0881312956459246e-05},
  {0, 12, 2.2008253973114916e-06},
  {0, 16, 3.4994116639364992e-08},
  {0, 21, 2.0617679699853177e-10},
  {0, 27, 4.5128645311911034e-13},
  {0, 34, 3.6705759658565078e-16},
  {0, 42, 1.1086374104875188e-19},
  {0, 52, 4.5259637744814071e-24},
  {0, 64, 2.5077336051690365e-29},
  {0, 80, 2.5251198425054717e-36},
  {0.5, 0.050000000000000003, 1.6524458461775169},
  {0.5, 0.089999999999999997, 1.5979094672063809},
  {0.5, 0.14999999999999999, 1.4424858653519552},
  {0.5, 0.29999999999999999, 1.1009281827393465},
  {0.5, 0.59999999999999998, 0.67884015172832068},
  {0.5, 1, 0.38404301690509268},
  {0.5, 1.8, 0.13787013199081699},
  {0.5, 3, 0.033495852577014908},
  {0.5, 4.5, 0.0062401846725348041},
  {0.5, 6.5, 0.00071301208986138413},
  {0.5, 9, 5.0214131645701641e-05},
  {0.5, 12, 2.1788864664236921e-06},
  {0.5, 16, 3.4729726966809387e-08},
  {0.5, 21, 2.0498080401203312e-10},
  {0.5, 27, 4.4923899333208496e-13},
  {0.5, 34, 3.6572974659692611e-16},
  {0.5, 42, 1.1053809539801567e-19},
  {0.5, 52, 4.5151992943368737e-24},
  {0.5, 64, 2.5028780041757571e-29},
  {0.5, 80, 2.5212017053512215e-36},
  {1, 0.050000000000000003, -0.12703350771091385},
  {1, 0.089999999999999997, 0.17466625446574702},
  {1, 0.14999999999999999, 0.39299907989688471},
  {1, 0.29999999999999999, 0.52713837809916808},
  {1, 0.59999999999999998, 0.44283818473904218},
  {1, 1, 0.28942803702599212},
  {1, 1.8, 0.11603800638801075},
  {1, 3, 0.030008658928584474},
  {1, 4.5, 0.0057834939712890637},
  {1, 6.5, 0.00067556397334386526},
  {1, 9, 4.8263071843445867e-05},
  {1, 12, 2.1143426008849353e-06},
  {1, 16, 3.394826487084696e-08},
  {1, 21, 2.0143369606406318e-10},
  {1, 27, 4.4315154764669147e-13},
  {1, 34, 3.6177468427870967e-16},
  {1, 42, 1.0956684329496136e-19},
  {1, 52, 4.4830582808960396e-24},
  {1, 64, 2.4883672550288647e-29},
  {1, 80, 2.5094835863294895e-36},
  {2, 0.050000000000000003, 0.07205607944586935},
  {2, 0.089999999999999997, 0.0037881066693023976},
  {2, 0.14999999999999999, -0.063285855467518221},
  {2, 0.29999999999999999, -0.054725606166307679},
  {2, 0.59999999999999998, 0.041967227707383918},
  {2, 1, 0.080616997622365974},
  {2, 1.8, 0.056330320167592887},
  {2, 3, 0.019156728326977342},
  {2, 4.5, 0.0042538888131115598},
  {2, 6.5, 0.00054378846682497811},
  {2, 9, 4.1167988222605331e-05},
  {2, 12, 1.8743194754549687e-06},
  {2, 16, 3.0991345805755679e-08},
  {2, 21, 1.8784020932359513e-10},
  {2, 27, 4.1960654062569575e-13},
  {2, 34, 3.4637374229057578e-16},
  {2, 42, 1.0576580325621621e-19},
  {2, 52, 4.3567521883255224e-24},
  {2, 64, 2.4311565203119044e-29},
  {2, 80, 2.46315104912754e-36},
  {3.5, 0.050000000000000003, 0.0050104726750521741},
  {3.5, 0.089999999999999997, -0.00036099131903457899},
  {3.5, 0.14999999999999999, -0.0052733241421356021},
  {3.5, 0.29999999999999999, 0.0049780385435186552},
  {3.5, 0.59999999999999998, -0.00214808248668498},
  {3.5, 1, -0.0046989228988775708},
  {3.5, 1.8, 0.0046322329109171273},
  {3.5, 3, 0.0050748615808837213},
  {3.5, 4.5, 0.0017751875310060249},
  {3.5, 6.5, 0.00029633049983671106},
  {3.5, 9, 2.6476199843424227e-05},
  {3.5, 12, 1.3431789622573077e-06},
  {3.5, 16, 2.41019816569463e-08},
  {3.5, 21, 1.5494716595239387e-10},
  {3.5, 27, 3.6104593099166952e-13},
  {3.5, 34, 3.0729055964258355e-16},
  {3.5, 42, 9.5974508999462537e-20},
  {3.5, 52, 4.0273543922642613e-24},
  {3.5, 64, 2.2804865218651827e-29},
  {3.5, 80, 2.3400830278311392e-36},
  {5, 0.050000000000000003, -0.00011577040157384549},
  {5, 0.089999999999999997, 0.00019795181685480849},
  {5, 0.14999999999999999, -0.00037978464247286113},
  {5, 0.29999999999999999, 0.00029351274591895269},
  {5, 0.59999999999999998, -0.00018137465859082875},
  {5, 1, 0.0003804618279975637},
  {5, 1.8, -0.00043963079157284692},
  {5, 3, 0.00037941674688920081},
  {5, 4.5, 0.00041217796937729188},
  {5, 6.5, 0.00011208665823020131},
  {5, 9, 1.3213430687909943e-05},
  {5, 12, 7.9817116997756862e-07},
  {5, 16, 1.6303194348791948e-08},
  {5, 21, 1.1494959308758619e-10},
  {5, 27, 2.8605577137628529e-13},
  {5, 34, 2.5531587283342304e-16},
  {5, 42, 8.2583392723608624e-20},
  {5, 52, 3.5663229066067849e-24},
  {5, 64, 2.0657069815546305e-29},
  {5, 80, 2.1618255917247534e-36},
  {7, 0.050000000000000003, 1.5473939883334456e-05},
  {7, 0.089999999999999997, -1.1712316893154113e-05},
  {7, 0.14999999999999999, 6.1133613062910691e-06},
  {7, 0.29999999999999999, 1.5376577757348192e-05},
  {7, 0.59999999999999998, -2.0216398517974723e-06},
  {7, 1, -4.4821978398777831e-06},
  {7, 1.8, 1.4931858368804649e-05},
  {7, 3, -1.6465782548147084e-05},
  {7, 4.5, 1.1364058432519206e-05},
  {7, 6.5, 1.5475373030963761e-05},
  {7, 9, 3.4014135641490458e-06},
  {7, 12, 2.9380553833259243e-07},
  {7, 16, 7.7466791063052588e-09},
  {7, 21, 6.5286740156987384e-11},
  {7, 27, 1.8423399389015243e-13},
  {7, 34, 1.7997886479355463e-16},
  {7, 42, 6.2207194570595743e-20},
  {7, 52, 2.8361271138961968e-24},
  {7, 64, 1.7145359907313019e-29},
  {7, 80, 1.8621624906198808e-36},
  {9, 0.050000000000000003, 4.2116583515920099e-07},
  {9, 0.089999999999999997, 5.9468879052313156e-07},
  {9, 0.14999999999999999, -1.8286570783475612e-07},
  {9, 0.29999999999999999, -2.0967666133155714e-07},
  {9, 0.59999999999999998, -2.3928932915897201e-07},
  {9, 1, -5.2169282012291128e-07},
  {9, 1.8, 1.3660851310156308e-08},
  {9, 3, 5.9603324965628304e-07},
  {9, 4.5, -6.4564325124486239e-07},
  {9, 6.5, 5.9169282666251064e-07},
  {9, 9, 4.8944119777956706e-07},
  {9, 12, 7.4034004978181971e-08},
  {9, 16, 2.821136900788107e-09},
  {9, 21, 3.0470848896432378e-11},
  {9, 27, 1.0209979730185198e-13},
  {9, 34, 1.1270935063428009e-16},
  {9, 42, 4.2594406098714349e-20},
  {9, 52, 2.0885465373393116e-24},
  {9, 64, 1.3369988207144836e-29},
  {9, 80, 1.5259910968946524e-36},
  {11, 0.050000000000000003, 4.3257547787488662e-09},
  {11, 0.089999999999999997, 3.289054583894294e-11},
  {11, 0.14999999999999999, 1.4625901927545362e-08},
  {11, 0.29999999999999999, -1.4781579634792277e-08},
  {11, 0.59999999999999998, -2.1451157379733309e-08},
  {11, 1, -2.3046108587651012e-08},
  {11, 1.8, -2.3697391278359871e-08},
  {11, 3, -1.4933530792123751e-08},
  {11, 4.5, 2.447838491825369e-08},
  {11, 6.5, -2.2704873987705942e-08},
  {11, 9, 3.048712307211842e-08},
  {11, 12, 1.205387509130007e-08},
  {11, 16, 7.7267834700295926e-10},
  {11, 21, 1.1599837994035355e-11},
  {11, 27, 4.8525897324268952e-14},
  {11, 34, 6.2602085402460826e-17},
  {11, 42, 2.6488616676285185e-20},
  {11, 52, 1.4235820357945278e-24},
  {11, 64, 9.7930574159545674e-30},
  {11, 80, 1.1895174356357999e-36},
  {13.779751351890001, 0.050000000000000003, -2.6552792683668287e-10},
  {13.779751351890001, 0.089999999999999997, 2.5308453437438207e-11},
  {13.779751351890001, 0.14999999999999999, 2.0178547860624356e-10},
  {13.779751351890001, 0.29999999999999999, -2.2239255806887944e-10},
  {13.779751351890001, 0.59999999999999998, 2.3912750601903717e-10},
  {13.779751351890001, 1, 2.5915217522752632e-10},
  {13.779751351890001, 1.8, -1.2352082042276732e-10},
  {13.779751351890001, 3, -2.4548647128238843e-10},
  {13.779751351890001, 4.5, -6.1332226321015821e-11},
  {13.779751351890001, 6.5, 2.8196972609013618e-10},
  {13.779751351890001, 9, -2.2612439971483266e-10},
  {13.779751351890001, 12, 3.6103667284108073e-10},
  {13.779751351890001, 16, 7.4995989635368212e-11},
  {13.779751351890001, 21, 2.116400597187794e-12},
  {13.779751351890001, 27, 1.3256747745126575e-14},
  {13.779751351890001, 34, 2.2559886824714131e-17},
  {13.779751351890001, 42, 1.1641078580327709e-20},
  {13.779751351890001, 52, 7.3413850643374238e-25},
  {13.779751351890001, 64, 5.7222716147585438e-30},
  {13.779751351890001, 80, 7.7413834474342902e-37},
  {16, 0.050000000000000003, 1.5075483105124768e-12},
  {16, 0.089999999999999997, -1.6587284489294076e-12},
  {16, 0.14999999999999999, 7.5835204380704087e-12},
  {16, 0.29999999999999999, 1.4643675189221086e-12},
  {16, 0.59999999999999998, -7.3186005735064926e-12},
  {16, 1, 4.2643006695651636e-12},
  {16, 1.8, -3.9179109657180589e-12},
  {16, 3, -5.5357382086307756e-12},
  {16, 4.5, -5.4542170540338166e-12},
  {16, 6.5, -7.9636455284761725e-12},
  {16, 9, 8.9341457700697023e-13},
  {16, 12, 2.2510226973985971e-12},
  {16, 16, 6.7801273986211326e-12},
  {16, 21, 3.9238647987144802e-13},
  {16, 27, 3.734378149555417e-15},
  {16, 34, 8.3851798554261271e-18},
  {16, 42, 5.2603916795990714e-21},
  {16, 52, 3.8775433969123116e-25},
  {16, 64, 3.4116666551167022e-30},
  {16, 80, 5.1219775497574189e-37},
  {18, 0.050000000000000003, 1.9436257437268891e-13},
  {18, 0.089999999999999997, 1.4309426933469206e-13},
  {18, 0.14999999999999999, -7.6468701835287997e-14},
  {18, 0.29999999999999999, -4.8912045895149216e-14},
  {18, 0.59999999999999998, -2.0084938797915743e-14},
  {18, 1, -5.3818398228733384e-14},
  {18, 1.8, -2.5324642248267509e-13},
  {18, 3, 1.867895289179169e-13},
  {18, 4.5, 3.1469696490991052e-13},
  {18, 6.5, 3.2110303079928532e-13},
  {18, 9, 1.6926616687962574e-13},
  {18, 12, -3.5866310638939001e-13},
  {18, 16, 4.34989910483032e-13},
  {18, 21, 6.5030262932450988e-14},
  {18, 27, 9.9060497171422596e-16},
  {18, 34, 2.9974546532926744e-18},
  {18, 42, 2.3113361179006188e-21},
  {18, 52, 2.0055832489575058e-25},
  {18, 64, 2.0014188877311259e-30},
  {18, 80, 3.3468042858971889e-37},
  {21, 0.050000000000000003, 2.5134944901861161e-15},
  {21, 0.089999999999999997, 2.3202751703578983e-15},
  {21, 0.14999999999999999, -1.7084718304457165e-15},
  {21, 0.29999999999999999, 2.4635357726810788e-15},
  {21, 0.59999999999999998, -2.8594580347598257e-16},
  {21, 1, 2.5488380381547007e-15},
  {21, 1.8, 2.368203125840237e-15},
  {21, 3, -1.7717954776113753e-15},
  {21, 4.5, 2.5468870628559849e-15},
  {21, 6.5, 1.545053765657927e-15},
  {21, 9, 1.4184728781249463e-15},
  {21, 12, 2.8481732984390672e-15},
  {21, 16, -6.7844314158444809e-16},
  {21, 21, 2.4041988718410453e-15},
  {21, 27, 9.4617557339649839e-17},
  {21, 34, 4.9663843336315239e-19},
  {21, 42, 5.5395832836686113e-22},
  {21, 52, 6.4071378742759822e-26},
  {21, 64, 7.9664504211635104e-31},
  {21, 80, 1.6064983958207289e-37},
  {24, 0.050000000000000003, -4.6653682871639155e-18},
  {24, 0.089999999999999997, 2.1041748602647074e-17},
  {24, 0.14999999999999999, 1.8457860813086012e-17},
  {24, 0.29999999999999999, -2.0207976214262857e-17},
  {24, 0.59999999999999998, 5.849717865792562e-18},
  {24, 1, 1.2008281785147596e-17},
  {24, 1.8, -1.7434050204001225e-17},
  {24, 3, -1.1654817574993355e-17},
  {24, 4.5, 1.4974682110550937e-17},
  {24, 6.5, 1.7267047602789098e-18},
  {24, 9, -1.9374152751700387e-17},
  {24, 12, -1.9176034704652782e-17},
  {24, 16, -7.4650695420099485e-18},
  {24, 21, 2.9870214325062329e-17},
  {24, 27, 5.5550734093382303e-18},
  {24, 34, 5.9465756116524789e-20},
  {24, 42, 1.041931334581406e-22},
  {24, 52, 1.6983941416079891e-26},
  {24, 64, 2.7363355235762907e-31},
  {24, 80, 6.8684520328510967e-38},
  {27.559502703780002, 0.050000000000000003, 1.6555348839232821e-20},
  {27.559502703780002, 0.089999999999999997, -4.9357715703750553e-20},
  {27.559502703780002, 0.14999999999999999, -6.000774569691655e-20},
  {27.559502703780002, 0.29999999999999999, -4.6634591057657615e-20},
  {27.559502703780002, 0.59999999999999998, -3.0429341022765016e-20},
  {27.559502703780002, 1, 6.704802922332414e-20},
  {27.559502703780002, 1.8, -7.5619697316266857e-20},
  {27.559502703780002, 3, -9.064115150300451e-21},
  {27.559502703780002, 4.5, -7.5981259872161365e-20},
  {27.559502703780002, 6.5, 6.8503465344397691e-20},
  {27.559502703780002, 9, -7.2987461564065002e-20},
  {27.559502703780002, 12, -6.0789174025893618e-20},
  {27.559502703780002, 16, -2.5884889201820137e-20},
  {27.559502703780002, 21, -8.0196119478290567e-20},
  {27.559502703780002, 27, 8.6372383229881102e-20},
  {27.559502703780002, 34, 3.012428844509094e-21},
  {27.559502703780002, 42, 1.0302243192357382e-23},
  {27.559502703780002, 52, 2.7379660007700474e-27},
  {27.559502703780002, 64, 6.3366296619241003e-32},
  {27.559502703780002, 80, 2.1529203825837968e-38},
  {31, 0.050000000000000003, 2.7713666456428044e-22},
  {31, 0.089999999999999997, 1.2983340473703343e-22},
  {31, 0.14999999999999999, -1.6601799043253268e-22},
  {31, 0.29999999999999999, 1.3041885777459101e-23},
  {31, 0.59999999999999998, 1.4365945399418386e-22},
  {31, 1, -1.0762142053408388e-22},
  {31, 1.8, -2.678027789675579e-22},
  {31, 3, 2.5301638304120655e-22},
  {31, 4.5, 2.7019668079794963e-22},
  {31, 6.5, 2.3247401674945648e-22},
  {31, 9, -2.983954064532629e-22},
  {31, 12, 3.882991494741517e-23},
  {31, 16, 3.3719866103148362e-22},
  {31, 21, 2.8102551943032569e-22},
  {31, 27, 3.6933475125205395e-22},
  {31, 34, 9.6879910101891911e-23},
  {31, 42, 7.6243886485915394e-25},
  {31, 52, 3.5886187247448306e-28},
  {31, 64, 1.2541151201332579e-32},
  {31, 80, 5.9838479922065031e-39},
  {35.477126762113997, 0.050000000000000003, 6.8549148558209401e-26},
  {35.477126762113997, 0.089999999999999997, 2.0297212900703187e-25},
  {35.477126762113997, 0.14999999999999999, 2.6413028442963911e-25},
  {35.477126762113997, 0.29999999999999999, 2.218603584889669e-25},
  {35.477126762113997, 0.59999999999999998, 1.1558044438799888e-25},
  {35.477126762113997, 1, -7.2741853291881413e-26},
  {35.477126762113997, 1.8, 2.6191934691411638e-25},
  {35.477126762113997, 3, 2.1399577004106239e-25},
  {35.477126762113997, 4.5, 1.1812024494308369e-25},
  {35.477126762113997, 6.5, 3.6608341157570135e-26},
  {35.477126762113997, 9, 2.6623114147457372e-25},
  {35.477126762113997, 12, -2.4373782806637233e-25},
  {35.477126762113997, 16, 2.5518392582032326e-25},
  {35.477126762113997, 21, -2.1276467001958494e-25},
  {35.477126762113997, 27, -2.9225630662973297e-25},
  {35.477126762113997, 34, 3.738275357917698e-25},
  {35.477126762113997, 42, 1.407839563563016e-26},
  {35.477126762113997, 52, 1.679303883929217e-29},
  {35.477126762113997, 64, 1.1135903975765203e-33},
  {35.477126762113997, 80, 8.9068060208873354e-40},
  {40, 0.050000000000000003, -2.022462440062698e-28},
  {40, 0.089999999999999997, -1.9513503265410821e-29},
  {40, 0.14999999999999999, -2.0323007200370867e-28},
  {40, 0.29999999999999999, 1.8489634592015929e-28},
  {40, 0.59999999999999998, -1.1203218801692914e-28},
  {40, 1, -1.7004412809804201e-28},
  {40, 1.8, -1.0236685403523679e-28},
  {40, 3, -1.7956980499881998e-28},
  {40, 4.5, 1.2077699283252146e-28},
  {40, 6.5, -2.0185520716471898e-28},
  {40, 9, -2.0708427165133248e-28},
  {40, 12, -2.530383844611483e-29},
  {40, 16, 2.1266098616897704e-28},
  {40, 21, -2.1949262733850766e-28},
  {40, 27, 7.7948249416721223e-29},
  {40, 34, 7.8434141039247267e-30},
  {40, 42, 1.0874824996487434e-28},
  {40, 52, 4.5286712787365343e-31},
  {40, 64, 6.6220137982511919e-35},
  {40, 80, 9.8152976200294007e-41},
  {45, 0.050000000000000003, -5.9291561575593085e-32},
  {45, 0.089999999999999997, 2.9328795308932258e-32},
  {45, 0.14999999999999999, -7.371489428872381e-32},
  {45, 0.29999999999999999, -6.9008468061625765e-32},
  {45, 0.59999999999999998, -6.0785492792736773e-32},
  {45, 1, 6.9767879900739426e-32},
  {45, 1.8, -7.7938002195032593e-33},
  {45, 3, 6.5644113055882605e-32},
  {45, 4.5, 2.9354672662634532e-32},
  {45, 6.5, -6.767211150771579e-32},
  {45, 9, -1.2166246698513464e-32},
  {45, 12, -1.0418971251494294e-32},
  {45, 16, -2.9839124523322826e-32},
  {45, 21, -7.7459517494274864e-32},
  {45, 27, 8.3366577829698929e-32},
  {45, 34, 2.7139775359944928e-32},
  {45, 42, 1.2072052926800829e-31},
  {45, 52, 4.1898070280970966e-33},
  {45, 64, 1.8304051706865377e-36},
  {45, 80, 6.0988296980485584e-42},
  {50, 0.050000000000000003, -2.2598464654116737e-35},
  {50, 0.089999999999999997, -4.2085171739112977e-36},
  {50, 0.14999999999999999, -1.4678745951797265e-35},
  {50, 0.29999999999999999, 1.6922779244872202e-35},
  {50, 0.59999999999999998, -1.8979606686771292e-35},
  {50, 1, -2.5320958678785332e-35},
  {50, 1.8, 2.1114838403074577e-35},
  {50, 3, 1.3050718795201812e-35},
  {50, 4.5, -2.1183049905545829e-35},
  {50, 6.5, -8.2002046613893739e-36},
  {50, 9, 1.7233567549912094e-35},
  {50, 12, 2.3119659714881153e-35},
  {50, 16, -7.6357433939043279e-36},
  {50, 21, -9.7605800593815828e-36},
  {50, 27, 2.7896512521625179e-35},
  {50, 34, -3.2021107881353418e-35},
  {50, 42, -2.8855423875842813e-35},
  {50, 52, 1.6072891365166296e-35},
  {50, 64, 2.9636541785916496e-38},
  {50, 80, 2.6095437160490545e-43},
};

}  // namespace qve::oracle
