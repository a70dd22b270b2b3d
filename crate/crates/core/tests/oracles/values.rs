// Generated by tests/oracles/generate.py (mpmath, 120 digits). Do not edit.

#[allow(clippy::approx_constant)]
pub const LOG_GAMMA: &[(f64, f64)] = &[
    (0.001, 6.9071788853838536617),
    (0.01, 4.5994798780420217016),
    (0.1, 2.252712651734205902),
    (0.25, 1.2880225246980774574),
    (0.5, 0.57236494292470008707),
    (0.75, 0.20328095143129537148),
    (0.9, 0.066376239734742954426),
    (0.99, 0.0058548067647097814532),
    (0.999, 0.00057803853289138023817),
    (1.001, -0.00057639359828330615152),
    (1.01, -0.0056903079460696505037),
    (1.1, -0.049872441259839761785),
    (1.5, -0.12078223763524522235),
    (1.9, -0.038984275923083361674),
    (1.99, -0.0041955290887916687019),
    (2.01, 0.0042600229070983458338),
    (2.1, 0.045437738544485179002),
    (2.5, 0.28468287047291915963),
    (3.0, 0.69314718055994530942),
    (3.7, 1.4280723266653881292),
    (7.0, 6.5792512120101009951),
    (10.5, 13.940625219403763633),
    (33.3, 82.603723581654943008),
    (100.0, 359.13420536957539878),
    (170.5, 704.00442773420467079),
    (1000.0, 5905.2204232091812118),
    (5000.0, 37582.626315685350332),
    (10000.0, 82099.717496442377273),
];

// (alpha, beta, rho, z, value)
#[allow(clippy::approx_constant)]
pub const ML: &[(f64, f64, f64, f64, f64)] = &[
    (0.5, 1.0, 1.0, -1.0, 0.42758357615580700441),
    (0.5, 0.5, 1.0, -0.3, 0.34380978317745975013),
    (0.4, 1.0, 2.0, -0.25, 0.59227446955868995016),
    (1.0, 1.0, 1.0, 1.0, 2.7182818284590452354),
    (1.0, 2.0, 1.0, 1.0, 1.7182818284590452354),
    (0.7, 1.0, 1.0, -2.5, 0.16863128667619575153),
    (0.3, 1.0, 1.0, -0.8, 0.51438195868824425346),
    (0.9, 1.0, 1.0, -9.0, 0.014646307996637191329),
    (0.5, 2.0, 1.0, -1.0, 0.55596274325131957831),
    (0.5, 3.0, 1.0, -1.0, 0.30821552131499462757),
    (0.25, 1.5, 3.0, 0.6, 11.165430714735157938),
    (1.5, 1.0, 1.0, -4.0, -0.27242487890994054146),
    (0.8, 0.7, 0.5, 2.0, 6.1601437016535231833),
    (0.9, 1.0, 1.0, -71.0, 0.0015162010271560877846),
    (0.7, 1.0, 1.0, -11.7, 0.03057476669608664963),
    (0.45, 1.0, 1.0, -3.0, 0.18786184545630398452),
    (0.1, 1.0, 1.0, -0.5, 0.65432446028800192845),
];

// (alpha, beta, rho, lam, z, value)
pub const DISCRETE_ML: &[(f64, f64, f64, f64, u32, f64)] = &[
    (0.25, 1.0, 2.0, -0.3333333333333333, 4, 0.42956542968750001689),
    (0.3, 1.0, 1.0, -0.42857142857142855, 1, 0.70000000000000001166),
    (0.3, 1.0, 1.0, 0.5, 1, 2.0),
    (0.3, 1.0, 1.0, -0.42857142857142855, 7, 0.53035403789620002105),
    (0.45, 1.0, 1.0, -0.8181818181818182, 20, 0.18235122704388249142),
    (0.45, 1.0, 1.0, -0.8181818181818182, 60, 0.11489314296078073502),
    (0.45, 1.0, 1.0, -0.8181818181818182, 100, 0.092192014447642133467),
    (0.1, 1.0, 1.0, -0.1111111111111111, 50, 0.85257428384985388407),
    (0.2, 0.5, 1.0, -0.25, 6, 0.16491549727999999801),
    (0.4, 2.0, 1.5, 0.3, 9, 30.456865971281786853),
    (0.25, 1.0, 1.0, -0.3333333333333333, 15, 0.57340879908861961193),
    (0.05, 1.0, 1.0, -0.05263157894736842, 14, 0.94197666869258594641),
];

// E_{alpha}(lambda, n) for n = 0..=61 with lambda = -alpha/(1-alpha) formed in f64;
// the last three alphas are alpha - 1 for the higher-order orders 1.05, 1.25, 1.449
pub const AB_KERNEL: &[(f64, &[f64])] = &[
    (
        0.1,
        &[
            1.0,
            0.89999999999999999375,
            0.89099999999999999276,
            0.8861399999999999922,
            0.88277309999999999181,
            0.88018277399999999151,
            0.87807075245999999127,
            0.87628389675839999106,
            0.87473294966861099087,
            0.87336123818151293071,
            0.87213048183536787316,
            0.87101358247296835284,
            0.86999063876751450198,
            0.86904659480150897513,
            0.86816977861922125351,
            0.86735095442682081915,
            0.86658268571601798422,
            0.86585889426302541448,
            0.86517454678618674708,
            0.86452542727190156681,
            0.86390796827262511573,
            0.86331912371830941615,
            0.86275627153623919735,
            0.8622171380564087138,
            0.86169973859373925184,
            0.86120233021585497192,
            0.86072337381010519811,
            0.86026150333186359833,
            0.85981550065906878133,
            0.85938427486731124589,
            0.85896684502276608198,
            0.85856232579854283783,
            0.85816991537507677304,
            0.85778888520185601113,
            0.85741857128644317735,
            0.85705836674475651941,
            0.85670771539918980543,
            0.85636610625218690611,
            0.85603306869513752394,
            0.85570816833798780189,
            0.85539100336530154572,
            0.85508120134082105988,
            0.85477841639573779624,
            0.85448232674656172228,
            0.85419263249718961135,
            0.85390905368691527739,
            0.85363132855201009545,
            0.85335921197337386916,
            0.8530924740868066413,
            0.85283089903583403225,
            0.85257428384985386835,
            0.85232243743275780157,
            0.85207517964919691813,
            0.8518323404973685816,
            0.85159375935865464722,
            0.85135928431568091084,
            0.85112877153142879923,
            0.85090208468294132221,
            0.85067909444394969222,
            0.85045967801142425332,
            0.85024371867163965377,
            0.85003110540185306909,
        ],
    ),
    (
        0.25,
        &[
            1.0,
            0.75000000000000001041,
            0.70312500000000001171,
            0.67675781250000001232,
            0.6582641601562500127,
            0.64397048950195313796,
            0.63229966163635255222,
            0.62242729961872102161,
            0.61386719439178706558,
            0.60630802792729811233,
            0.59953819998554537503,
            0.59340720383011104336,
            0.58780409026236669899,
            0.58264467298921564223,
            0.57786353131846686368,
            0.57340879908861961193,
            0.56923864910010899014,
            0.5653188504895597139,
            0.56162102809130982527,
            0.55812139447311621515,
            0.55479980831190025024,
            0.55163906309604117823,
            0.54862434159448196632,
            0.54574279172679521403,
            0.5429831927458518916,
            0.54033568956319836689,
            0.53779157915427604716,
            0.53534313723615168435,
            0.53298347642333494421,
            0.53070642923165645277,
            0.52850645087594175833,
            0.52637853796864557905,
            0.52431816009245483719,
            0.52232120187220764544,
            0.52038391366780706866,
            0.51850286939091655685,
            0.51667493024337334138,
            0.51489721340567507548,
            0.51316706488513914694,
            0.51148203587691110277,
            0.50983986210549816506,
            0.50823844570639168287,
            0.50667583928152447458,
            0.50515023182253580208,
            0.50365993624497574374,
            0.5022033783169102516,
            0.50077908679863428282,
            0.4993856846377335553,
            0.49802188108663758752,
            0.49668646462893656037,
            0.49537829661677751713,
            0.49409630553516115074,
            0.49283948182037187526,
            0.49160687316944966579,
            0.49039758028584390796,
            0.48921075301341537851,
            0.48804558681696775912,
            0.48690131957265551019,
            0.4857772286360633134,
            0.48467262815959376658,
            0.48358686663412622568,
            0.48251932463279715141,
        ],
    ),
    (
        0.45,
        &[
            1.0,
            0.55000000000000001832,
            0.4386250000000000164,
            0.38043156250000001441,
            0.34262369453125001283,
            0.31530074621289063656,
            0.29425921711156739335,
            0.2773532875344621801,
            0.26335143986769062692,
            0.25148685768039804048,
            0.24125244719653203378,
            0.23229695236670871602,
            0.22436792767892776921,
            0.21727841120761004537,
            0.21088643994206022023,
            0.20508192371375107164,
            0.19977793535412831941,
            0.19490475669904086106,
            0.19040570266256167261,
            0.18623412612498158191,
            0.18235122704388251329,
            0.17872442163205081234,
            0.175326109364400055,
            0.17213272762062038211,
            0.16912401763400359059,
            0.16628244792844506853,
            0.16359275668326882577,
            0.16104158499016498982,
            0.15861718034378070022,
            0.15630915495514723478,
            0.15410828726070363045,
            0.15200635776188587973,
            0.14999601237021940096,
            0.14807064795565931769,
            0.14622431594407468892,
            0.14445164068354434685,
            0.14274774996991191129,
            0.14110821564121759462,
            0.13952900255554707246,
            0.1380064245849437213,
            0.13653710650964195465,
            0.13511795089718066773,
            0.13374610921138429405,
            0.1324189565254354647,
            0.13113406931794399474,
            0.12988920591614997182,
            0.12868228922014151578,
            0.12751139139930529192,
            0.12637472029957915701,
            0.12527060733934896023,
            0.1241974967045378064,
            0.12315393568078110238,
            0.12213856598352944284,
            0.12115011596625021651,
            0.12018739360323515323,
            0.11924928015737413003,
            0.11833472445504045219,
            0.11744273770028912911,
            0.11657238876917632877,
            0.1157227999323951882,
            0.11489314296078074969,
            0.11408263557372293584,
        ],
    ),
    (
        0.050000000000000044,
        &[
            1.0,
            0.94999999999999995254,
            0.94762499999999994829,
            0.94638406249999994603,
            0.94553825078124994448,
            0.94489445029101556829,
            0.94437367126973138763,
            0.94393582588642900645,
            0.94355774931563542423,
            0.94322483351886784145,
            0.94292726699821443741,
            0.94265813773485300641,
            0.94241239066772199226,
            0.94218621565013439451,
            0.94197666869258588167,
            0.94178142726137884551,
            0.94159862641240784872,
            0.94142674567385545753,
            0.94126452890043707142,
            0.94111092619087279683,
            0.94096505095333438794,
            0.94082614760843121393,
            0.94069356691313968891,
            0.94056674684275577627,
            0.94044519759177365885,
            0.94032848967164242808,
            0.9402162443676941675,
            0.94010812601487907852,
            0.94000383569114146653,
            0.93990310602692048568,
            0.93980569690157391277,
            0.93971139185066173923,
            0.93961999504752849098,
            0.93953132875230504692,
            0.9394452311439772483,
            0.9393615544684244056,
            0.93928016344866449825,
            0.93920093391393007804,
            0.9391237516123527741,
            0.93904851117848117248,
            0.93897511523198867259,
            0.9389034735880391215,
            0.93883350256309152206,
            0.93876512436261098937,
            0.93869826653934210095,
            0.93863286151259398446,
            0.9385688461404626744,
            0.93850616133813716146,
            0.93844475173644979891,
            0.93838456537567787452,
            0.93832555343031192504,
            0.93826766996110236893,
            0.93821087169119906299,
            0.93815511780362446096,
            0.93810036975768317037,
            0.93804659112221947416,
            0.93799374742389849238,
            0.937941806008913248,
            0.93789073591671486582,
            0.93784050776453135566,
            0.93779109364158597105,
            0.93774246701205237763,
        ],
    ),
    (
        0.25,
        &[
            1.0,
            0.75000000000000001041,
            0.70312500000000001171,
            0.67675781250000001232,
            0.6582641601562500127,
            0.64397048950195313796,
            0.63229966163635255222,
            0.62242729961872102161,
            0.61386719439178706558,
            0.60630802792729811233,
            0.59953819998554537503,
            0.59340720383011104336,
            0.58780409026236669899,
            0.58264467298921564223,
            0.57786353131846686368,
            0.57340879908861961193,
            0.56923864910010899014,
            0.5653188504895597139,
            0.56162102809130982527,
            0.55812139447311621515,
            0.55479980831190025024,
            0.55163906309604117823,
            0.54862434159448196632,
            0.54574279172679521403,
            0.5429831927458518916,
            0.54033568956319836689,
            0.53779157915427604716,
            0.53534313723615168435,
            0.53298347642333494421,
            0.53070642923165645277,
            0.52850645087594175833,
            0.52637853796864557905,
            0.52431816009245483719,
            0.52232120187220764544,
            0.52038391366780706866,
            0.51850286939091655685,
            0.51667493024337334138,
            0.51489721340567507548,
            0.51316706488513914694,
            0.51148203587691110277,
            0.50983986210549816506,
            0.50823844570639168287,
            0.50667583928152447458,
            0.50515023182253580208,
            0.50365993624497574374,
            0.5022033783169102516,
            0.50077908679863428282,
            0.4993856846377335553,
            0.49802188108663758752,
            0.49668646462893656037,
            0.49537829661677751713,
            0.49409630553516115074,
            0.49283948182037187526,
            0.49160687316944966579,
            0.49039758028584390796,
            0.48921075301341537851,
            0.48804558681696775912,
            0.48690131957265551019,
            0.4857772286360633134,
            0.48467262815959376658,
            0.48358686663412622568,
            0.48251932463279715141,
        ],
    ),
    (
        0.44900000000000007,
        &[
            1.0,
            0.55099999999999992249,
            0.43991784899999990268,
            0.38183310332425089582,
            0.34406999137212666693,
            0.31676380272873145825,
            0.29572509613585628576,
            0.27881451360262991098,
            0.26480383837395520902,
            0.25292806859831832433,
            0.24268116181706861769,
            0.23371249452554784068,
            0.22577001194853954229,
            0.21866699754836133888,
            0.21226164350298290167,
            0.20644395742315415124,
            0.20112707264897517818,
            0.19624130696336543152,
            0.19172999487103949076,
            0.18754649788611240996,
            0.18365201725361513923,
            0.18001396557335305066,
            0.17660473548129887005,
            0.17340075544767765845,
            0.17038175652733693847,
            0.16753019635421358326,
            0.16483080189362845473,
            0.16227020296733039264,
            0.15983663592783445349,
            0.15751970209568450784,
            0.1553101693496285865,
            0.15319980801691206814,
            0.1511812542473752989,
            0.14924789557539090567,
            0.14739377452008054456,
            0.14561350694677140479,
            0.14390221258253115572,
            0.14225545559713658483,
            0.14066919356527780517,
            0.1391397334435577271,
            0.13766369344720235895,
            0.13623796991151075399,
            0.13485970838336336713,
            0.13352627831724193579,
            0.13223525085481949558,
            0.13098437925235689037,
            0.12977158158984444348,
            0.12859492545313551327,
            0.12745261432764871795,
            0.12634297548147315311,
            0.12526444914840667622,
            0.1242155788487952102,
            0.12319500270898513975,
            0.12220144565952694696,
            0.12123371240860318455,
            0.12029068110100658725,
            0.11937129758477933291,
            0.11847457021768158164,
            0.11759956515426523706,
            0.11674540206171724172,
            0.11591125021899581842,
            0.11509632495927078923,
        ],
    ),
];
