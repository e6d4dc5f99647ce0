// Iterates and residuals read off the published figures.
// `*_X` lists x^1, x^2, ... and `*_RES` lists |y_A^k - y_B^k| for k = 1, 2, ...

pub const E2_245_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [1.2999999999999998, 2.0],
    [2.571917656836094, 0.7943428328503053],
    [2.9060752191369823, 0.4915884333641444],
    [3.053518594044455, 0.2398474393217438],
    [3.118774791718569, 0.07629942281524071],
    [3.113444995191702, -0.0008496721484581027],
    [3.0630165806437053, -0.013506528475393242],
    [3.012588166095709, -0.026163384802328604],
    [2.9621597515477123, -0.038820241129263966],
    [2.9226302073318142, -0.0672811033693912],
    [2.8831006631159157, -0.09574196560951842],
    [2.8435711189000177, -0.12420282784964565],
    [2.8040415746841196, -0.15266369008977287],
    [2.7645120304682216, -0.1811245523299001],
    [2.7249824862523235, -0.20958541457002733],
    [2.6854529420364255, -0.23804627681015456],
    [2.6459233978205274, -0.2665071390502818],
    [2.6063938536046294, -0.294968001290409],
    [2.5668643093887313, -0.32342886353053624],
    [2.5273347651728333, -0.35188972577066346],
    [2.4878052209569352, -0.3803505880107907],
    [2.448275676741037, -0.4088114502509179],
    [2.408746132525139, -0.43727231249104515],
    [2.369216588309241, -0.4657331747311724],
    [2.329687044093343, -0.4941940369712996],
    [2.290157499877445, -0.5226548992114268],
    [2.250627955661547, -0.551115761451554],
    [2.211098411445649, -0.5795766236916813],
    [2.171568867229751, -0.6080374859318085],
    [2.132039323013853, -0.6364983481719357],
    [2.0925097787979547, -0.664959210412063],
    [2.0529802345820567, -0.6934200726521902],
    [2.0059928570191254, -0.7108175314931706],
    [1.959005479456194, -0.7282149903341509],
    [1.9190430256847728, -0.7557160067052413],
    [1.8790805719133516, -0.7832170230763316],
    [1.8391181181419305, -0.8107180394474218],
    [1.7991556643705096, -0.8382190558185121],
    [1.7591932105990884, -0.8657200721896023],
    [1.7192307568276672, -0.8932210885606926],
    [1.6792683030562459, -0.9207221049317829],
    [1.6393058492848245, -0.9482231213028731],
    [1.599343395513403, -0.9757241376739634],
    [1.5593809417419817, -1.0032251540450536],
    [1.5194184879705603, -1.030726170416144],
    [1.479456034199139, -1.0582271867872342],
    [1.4394935804277176, -1.0857282031583244],
    [1.3995311266562964, -1.1132292195294147],
    [1.3595686728848753, -1.140730235900505],
    [1.319606219113454, -1.1682312522715952],
    [1.3102419246106183, -1.176429562074131],
];

pub const E2_120_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [1.2999999999999998, 2.0],
    [2.963169894987529, 0.3779866768130681],
    [2.9190527789057064, 0.475606803060068],
    [3.0420545305689775, 0.23114639959945016],
    [3.046897046300576, 0.14022941363200037],
    [3.039108983992874, 0.06691329772194932],
    [3.012625198171726, 0.019617646954303902],
    [2.9782714509785277, -0.01634503000530918],
    [2.9439177037853295, -0.05230770696492204],
    [2.9010757017157767, -0.0759816359886274],
    [2.858233699646224, -0.09965556501233275],
    [2.815391697576671, -0.1233294940360381],
    [2.78020694361485, -0.15807428345291763],
    [2.745022189653029, -0.19281907286979738],
    [2.7015228720104005, -0.21550600893191296],
    [2.658023554367772, -0.23819294499402854],
    [2.6217515212902485, -0.2713706064320205],
    [2.5854794882127248, -0.30454826787001243],
    [2.5418172645148056, -0.32699196494542404],
    [2.4981550408168864, -0.34943566202083565],
    [2.4610965688114392, -0.3814580987680922],
    [2.424038096805992, -0.4134805355153488],
    [2.386979624800545, -0.4455029722626054],
    [2.34270468200004, -0.46700210860909674],
    [2.298429739199535, -0.4885012449555881],
    [2.260644987746046, -0.5194110691500953],
    [2.222860236292557, -0.5503208933446024],
    [2.185075484839068, -0.5812307175391096],
    [2.140977075490799, -0.602970121922823],
    [2.09687866614253, -0.6247095263065363],
    [2.058759054345253, -0.6550613878667673],
    [2.020639442547976, -0.6854132494269981],
    [1.9825198307506993, -0.7157651109872292],
    [1.9444002189534224, -0.7461169725474602],
    [1.9008843790208132, -0.768624542362814],
    [1.857368539088204, -0.7911321121781679],
    [1.8187004518330383, -0.8206026129214767],
    [1.7800323645778724, -0.8500731136647857],
    [1.7413642773227065, -0.8795436144080946],
    [1.7026961900675404, -0.9090141151514035],
    [1.6640281028123742, -0.9384846158947124],
    [1.625360015557208, -0.9679551166380214],
    [1.5826488604123463, -0.9914399769041613],
    [1.539937705267485, -1.0149248371703012],
    [1.4972265501226236, -1.0384096974364412],
    [1.4577886002688705, -1.0664071947478975],
    [1.4183506504151175, -1.0944046920593538],
    [1.3789127005613646, -1.12240218937081],
    [1.3394747507076117, -1.1503996866822663],
    [1.3086040191168975, -1.1736789845792477],
];

pub const E2_EXACT_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [1.6642919109341463, 0.05325872279447874],
    [2.032996183271009, -0.44406258824826483],
    [2.074196613943129, -0.5824739540863599],
    [2.0567396398979265, -0.6425376482340701],
    [2.0237910994104022, -0.6806963940912838],
    [1.9859668407755773, -0.7118297790013286],
    [1.9465312735824996, -0.7406263295966204],
    [1.9065611265030369, -0.7686458518630948],
    [1.866415610183123, -0.7964102731761675],
    [1.8262134720606285, -0.8240923080786322],
    [1.7859933549462594, -0.8517481806961695],
    [1.745767618586219, -0.8793958761806278],
    [1.705540150259962, -0.9070410512834426],
    [1.6653121540171032, -0.934685458152309],
    [1.6250839980285108, -0.9623296325560127],
    [1.584855793799114, -0.9899737367699168],
    [1.5446275749363287, -1.0176178197067063],
    [1.5043993515859129, -1.045261896084877],
    [1.4641711268226756, -1.0729059704063202],
    [1.4239429015981622, -1.100550044056583],
    [1.3837146762064947, -1.1281941174824694],
    [1.3434864507595965, -1.1558381908090352],
    [1.311846900103361, -1.177580289711558],
    [1.311846900103361, -1.177580289711558],
];

pub const E3_245_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [0.7882409346931343, 0.8355886399695496],
    [2.1732568289547194, -0.4398976995074002],
    [2.2372997882250685, -0.41182019608840004],
    [2.351701734237025, -0.5913114360687454],
    [2.401745726166118, -0.669597081029015],
    [2.4253326885721513, -0.7112757109014962],
    [2.430023670117614, -0.720292225836492],
    [2.438718442852827, -0.736774260235086],
    [2.44741321558804, -0.75325629463368],
    [2.44824627058572, -0.7548223367569835],
    [2.4507993880042847, -0.7597700875168598],
    [2.4517006141245905, -0.7615280952636029],
    [2.4529153961255297, -0.7638957892198579],
];

pub const E3_120_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [0.7882409346931343, 0.8355886399695496],
    [2.1732568289547194, -0.4398976995074002],
    [2.2372997882250685, -0.41182019608840004],
    [2.358082781450654, -0.5997522290806182],
    [2.403518905584, -0.6689146235604573],
    [2.4262694933707945, -0.7094298131320186],
    [2.439320099641045, -0.7336224310495805],
    [2.446872504568434, -0.7479446644832588],
    [2.451231243501812, -0.7563251442317466],
    [2.4537300435938496, -0.7611688979746194],
    [2.4551504428917017, -0.76393508059268],
    [2.4559505826632764, -0.7654971200554284],
];

pub const E3_EXACT_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [1.796407341300168, -0.3928064083779881],
    [2.0562594404161945, -0.7506648026887706],
    [2.1100986840504277, -0.8416857397464588],
    [2.130963651718051, -0.8796862556839584],
    [2.1409939185290296, -0.8985846360141039],
    [2.146270516572635, -0.9087006549364485],
    [2.1491706608241725, -0.9143132108210776],
    [2.1508017761356104, -0.9174864654568593],
    [2.151730812606964, -0.919299246128854],
    [2.1522637286462025, -0.9203408692771082],
    [2.152570656068578, -0.9209413688463102],
];

pub const H1_245_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [0.30000000000000004, 0.0],
    [1.6, 0.0],
    [2.0840015998400157, -0.7998400159984002],
    [1.9627345594848262, -1.393123138565978],
    [1.8414675191296366, -1.3931231385659775],
    [1.720200478774447, -1.3931231385659777],
    [1.5989334384192575, -1.393123138565978],
    [1.4776663980640679, -1.3931231385659775],
    [1.4212670403551897, -1.3931231385659777],
];

pub const H1_120_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [0.30000000000000004, 0.0],
    [1.6, 0.0],
    [2.1841021525042668, -0.6671968283947391],
    [2.121754667496822, -1.3188203935401046],
    [2.059407182489377, -1.3188203935401046],
    [1.9381401421341875, -1.3931231385659775],
    [1.8168731017789979, -1.3931231385659777],
    [1.6956060614238084, -1.393123138565978],
    [1.5743390210686188, -1.3931231385659775],
    [1.4530719807134291, -1.3931231385659777],
    [1.4212670403551897, -1.393123138565978],
];

pub const H1_EXACT_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [1.448014816823016, 1.291200937154192],
    [2.534644192872839, 0.06910392569820178],
    [2.6570362611439555, -0.9967120306975277],
    [2.5406323019877544, -1.3650944442802646],
    [2.41938182423479, -1.3917482010974944],
    [2.2981148314238724, -1.3930502954533113],
    [2.1768477912133575, -1.3931187850445261],
    [2.0555807508587907, -1.3931228395123516],
    [1.9343137105036063, -1.3931231144132972],
    [1.813046670148417, -1.3931231361994252],
    [1.6917796297931984, -1.393123138271285],
    [1.5705125894380092, -1.3931231385156368],
    [1.4492455490828198, -1.3931231385522904],
    [1.4212670403552037, -1.3931231385568696],
    [1.4212670403552037, -1.3931231385568696],
];

pub const H2_245_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [0.4212670403551897, 0.0],
    [1.8425340807103794, 0.0],
    [2.3241105822531214, -0.921082805370617],
    [2.3241105822531214, -1.3931231385659777],
];

pub const H2_120_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [0.4212670403551897, 0.0],
    [1.6276883113541505, -0.21059139768580848],
    [2.1940199611629523, -0.8137977761804803],
    [2.1940199611629523, -1.3931231385659775],
];

pub const H2_EXACT_X: &[[f64; 2]] = &[
    [-1.0, 1.5],
    [1.569281857178206, 1.291200937154192],
    [2.72232299125678, 0.013467153235845908],
    [2.897121701603159, -1.0865632432073675],
    [2.8987833405197327, -1.3778892696171487],
    [2.8987861425969155, -1.3925615307061925],
    [2.898786146313372, -1.3931027146894364],
];

pub const E2_245_RES: &[f64] = &[
    2.3537204591879637,
    1.7525363706556414,
    0.45091185707530235,
    0.2917414555485072,
    0.1760861296016655,
    0.07733297863612668,
    0.051992509132617076,
    0.051992509132617076,
    0.051992509132617076,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.04870939894279292,
    0.05010474253366705,
    0.05010474253366705,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.04851086077236671,
    0.0124459750583952,
    0.0,
];

pub const E2_120_RES: &[f64] = &[
    2.3537204591879637,
    2.3231576184556966,
    0.10712613583928612,
    0.27366095770562715,
    0.09104585820352434,
    0.07372860209338492,
    0.054205806819523535,
    0.04973423449009408,
    0.04973423449009408,
    0.04894785037922489,
    0.04894785037922489,
    0.04894785037922489,
    0.04944863297379618,
    0.04944863297379618,
    0.049060041818783456,
    0.049060041818783456,
    0.04915707072305052,
    0.04915707072305052,
    0.04909286421324379,
    0.04909286421324379,
    0.04897720697028921,
    0.04897720697028921,
    0.04897720697028921,
    0.04921873041468084,
    0.04921873041468084,
    0.04881705310787681,
    0.04881705310787681,
    0.04881705310787681,
    0.04916575444357705,
    0.04916575444357705,
    0.04872720291322409,
    0.04872720291322409,
    0.04872720291322409,
    0.04872720291322409,
    0.048992030209346234,
    0.048992030209346234,
    0.048618220720574465,
    0.048618220720574465,
    0.048618220720574465,
    0.048618220720574465,
    0.048618220720574465,
    0.048618220720574465,
    0.04874198842403286,
    0.04874198842403286,
    0.04874198842403286,
    0.048365398213724375,
    0.048365398213724375,
    0.048365398213724375,
    0.048365398213724375,
    0.03866429592689254,
    0.0,
];

pub const E2_EXACT_RES: &[f64] = &[
    3.0317506015237115,
    0.6190891105945319,
    0.14441323236024872,
    0.06254912707212242,
    0.05041523783196307,
    0.048989409031250465,
    0.0488303725771877,
    0.048812972513414536,
    0.04881112139095212,
    0.04881093080408765,
    0.04881091180188092,
    0.048810909961900996,
    0.048810909788748066,
    0.04881090977278441,
    0.048810909771329125,
    0.04881090977754143,
    0.04881090978754908,
    0.0488109097716184,
    0.048810909771186954,
    0.04881090977123197,
    0.048810909781918425,
    0.048810909771187516,
    0.038389842802694626,
    0.0,
];

pub const E3_245_RES: &[f64] = &[
    1.907681340226844,
    1.882852737085279,
    0.0699274397525575,
    0.2128495019515072,
    0.09291417187407157,
    0.04789000922521213,
    0.010163800934339186,
    0.018634820386401376,
    0.018634820386401376,
    0.0017738287857401972,
    0.005567642780821396,
    0.001975550494806389,
    0.0026611407291407562,
    0.00098117470102488,
];

pub const E3_120_RES: &[f64] = &[
    1.907681340226844,
    1.882852737085279,
    0.0699274397525575,
    0.22339870294413075,
    0.08275190744898708,
    0.04646579204817453,
    0.02748819902660491,
    0.01619151601043035,
    0.009446218603449534,
    0.0054503167083723505,
    0.003109549877683062,
    0.001755047274929662,
    0.0007274810327096371,
];

pub const E3_EXACT_RES: &[f64] = &[
    3.376775106232906,
    0.44225077025788967,
    0.10575195098893429,
    0.04335188677886042,
    0.02139521047810123,
    0.011409484026502213,
    0.006317564422925208,
    0.0035679240662769658,
    0.002036978775015748,
    0.001170033455870412,
    0.0006743917075539298,
];

pub const H1_245_RES: &[f64] = &[
    1.9849433241279208,
    1.3,
    0.9348805270407635,
    0.605549798612833,
    0.12126704035518965,
    0.12126704035518965,
    0.12126704035518965,
    0.12126704035518965,
    0.05639935770887816,
    0.0,
];

pub const H1_120_RES: &[f64] = &[
    1.9849433241279208,
    1.3,
    0.8867507724158556,
    0.6545994802468986,
    0.0623474850074448,
    0.142220227094767,
    0.12126704035518965,
    0.12126704035518965,
    0.12126704035518965,
    0.12126704035518965,
    0.03180494035823944,
    0.0,
];

pub const H1_EXACT_RES: &[f64] = &[
    2.456903252476644,
    1.6353239759460785,
    1.072820335043769,
    0.3863359734017545,
    0.12414548363832685,
    0.12127398317493569,
    0.12126705955140005,
    0.12126704042234578,
    0.12126704035549613,
    0.12126704035519138,
    0.1212670403552183,
    0.12126704035518965,
    0.12126704035518965,
    0.027978508727615203,
    0.0,
];

pub const H2_245_RES: &[f64] = &[
    2.0663978319771825,
    1.4212670403551897,
    1.039379363460499,
    0.47204033319536043,
    2.220446049250313e-16,
];

pub const H2_120_RES: &[f64] = &[
    2.0663978319771825,
    1.2246636354109688,
    0.8273992220396492,
    0.5793253623854973,
    3.1401849173675503e-16,
];

pub const H2_EXACT_RES: &[f64] = &[
    2.5777521817021856,
    1.721077418201604,
    1.1138318823941835,
    0.29133076512377065,
    0.014672261356610879,
    0.0005411839832570809,
];

// Shadow points y_A^k drawn alongside the iterates, for k = 1, 2, ...

pub const E3_245_YA: &[[f64; 2]] = &[
    [0.0, 0.0],
    [0.0, 0.0],
    [1.3209729349912358, -1.30356384289595],
    [1.2791902728162292, -1.1312037677083835],
    [1.3435482268990935, -1.2324093627284591],
    [1.370005256422153, -1.2690163778162478],
    [1.3889012372827236, -1.301678492753733],
    [1.3848974460929733, -1.2942129732901348],
    [1.3848974460929733, -1.2942129732901348],
    [1.3927591638305061, -1.3091289655654255],
    [1.3905434426206538, -1.304805959559421],
    [1.3921953339189121, -1.3079957025725544],
    [1.3918817780382788, -1.3073860163630424],
    [1.3926497788587973, -1.308880159879567],
];

pub const E3_120_YA: &[[f64; 2]] = &[
    [0.0, 0.0],
    [0.0, 0.0],
    [1.3209729349912358, -1.30356384289595],
    [1.2723786900111516, -1.1219481969480503],
    [1.347725559103391, -1.2407178354604291],
    [1.3704110954499422, -1.2693650403687071],
    [1.3801110769664862, -1.2856876120227065],
    [1.385609278309348, -1.29555799650659],
    [1.3888029443033592, -1.3014997501917807],
    [1.3906628831446994, -1.3050364761973954],
    [1.391741283938885, -1.3071140473222078],
    [1.3923615434651626, -1.30831819047752],
    [1.3927148811277472, -1.3090071858570043],
];

pub const E3_EXACT_YA: &[[f64; 2]] = &[
    [-1.1480148168230162, 1.291200937154192],
    [1.1271527216378239, -0.9333968013887954],
    [1.3387946067315095, -1.2178076221779803],
    [1.3723048214231244, -1.2718954001367297],
    [1.3831552192640835, -1.2910278732991143],
    [1.3878682496402852, -1.2997315879826448],
    [1.3902097392230195, -1.3041671108446713],
    [1.391455426462563, -1.3065609138292777],
    [1.3921430708418332, -1.307893194545107],
    [1.3925305458235786, -1.3086474448665046],
    [1.3927514356939765, -1.309078589857765],
    [1.3928781996775093, -1.3093264018970017],
];

pub const H2_245_YA: &[[f64; 2]] = &[
    [0.0, 0.0],
    [0.0, 0.0],
    [0.9396905388124479, -0.921082805370617],
    [1.4212670403551897, -1.3931231385659775],
    [1.4212670403551897, -1.3931231385659775],
];

pub const H2_120_YA: &[[f64; 2]] = &[
    [0.0, 0.0],
    [0.2148457693562289, -0.21059139768580848],
    [0.8549353905463879, -0.8137977761804804],
    [1.42126704035519, -1.3931231385659777],
    [1.42126704035519, -1.3931231385659777],
];

pub const H2_EXACT_YA: &[[f64; 2]] = &[
    [-1.1480148168230162, 1.291200937154192],
    [0.26822590627661547, 0.013467153235845908],
    [1.2464683300088109, -1.0865632432073675],
    [1.419605401438616, -1.3778892696171487],
    [1.421264238278007, -1.3925615307061925],
    [1.4212670366387332, -1.3931027146894364],
    [1.4212670403745586, -1.393122396208641],
];
