// Generated by tests/oracle/generate.py; do not edit by hand.

pub const F_LOG_M3: f64 = -3.0485873515737420588;
pub const RHO_1P3: f64 = 0.2141650169574413874;
pub const G0_2: f64 = 0.38079707797788244406;
pub const G1_HALF: f64 = 0.039659800808458560834;
/// `K_T^0(1.7)` at mu = 1, T = 0.3, Delta_0 = 0.2.
pub const KT0_1P7: f64 = 1.9073032522763008698;
/// Rows `z, f, rho, g0, g1, g2` on [-30, 30].
pub const SPECIAL: [[f64; 6]; 247] = [
    [-30.0, -30.000000000000093576, 0.99999999999990642377, 0.033333333333327094918, -0.0011111111111046647486, 6.2384153125577813337e-15],
    [-29.75, -29.750000000000120154, 0.99999999999987984574, 0.033613445378143182907, -0.0011298637101816092233, 8.0775971305989989407e-15],
    [-29.5, -29.500000000000154281, 0.99999999999984571888, 0.033898305084735302975, -0.0011490950876076861266, 1.0459736970786004925e-14],
    [-29.25, -29.250000000000198101, 0.99999999999980189912, 0.034188034188020642675, -0.0011688216816281860142, 1.354535930288827221e-14],
    [-29.0, -29.000000000000254367, 0.99999999999974563344, 0.034482758620672112651, -0.0011890606420745992938, 1.7542521706029895285e-14],
    [-28.75, -28.750000000000326613, 0.99999999999967338687, 0.034782608695629452999, -0.0012098298676513470167, 2.2720913688926470194e-14],
    [-28.5, -28.50000000000041938, 0.99999999999958062043, 0.03508771929821618389, -0.0012311480455220149038, 2.9430144971035152677e-14],
    [-28.25, -28.250000000000538494, 0.99999999999946150598, 0.035398230088457451751, -0.0012530346933586004852, 3.8123470568088046967e-14],
    [-28.0, -28.00000000000069144, 0.99999999999930855999, 0.035714285714236325714, -0.0012755102040304802033, 4.9388572192293424556e-14],
    [-27.75, -27.750000000000887827, 0.99999999999911217345, 0.036036036035972048537, -0.0012985958931241944303, 6.3987498943626155014e-14],
    [-27.5, -27.500000000001139992, 0.99999999999886000815, 0.036363636363553455138, -0.0013223140495008535066, 8.2908498402847783245e-14],
    [-27.25, -27.250000000001463779, 0.99999999999853622149, 0.036697247706314585063, -0.0013466879891151202949, 1.0743328543980464862e-13],
    [-27.0, -27.000000000001879529, 0.99999999999812047118, 0.03703703703689781268, -0.0013717421123384724092, 1.3922435677962613189e-13],
    [-26.75, -26.750000000002413363, 0.99999999999758663723, 0.037383177569913019606, -0.0013975019650499549182, 1.8043833807924611334e-13],
    [-26.5, -26.500000000003098819, 0.99999999999690118086, 0.037735849056369900442, -0.0014239943037800853647, 2.3387314254214450728e-13],
    [-26.25, -26.250000000003978963, 0.99999999999602103746, 0.038095238094934936188, -0.001451247165218171852, 3.0315905034467897317e-13],
    [-26.0, -26.000000000005109089, 0.99999999999489091097, 0.03846153846114545469, -0.0014792899404202798705, 3.9300684830453181208e-13],
    [-25.75, -25.7500000000065602, 0.99999999999343979983, 0.038834951455801149502, -0.001508153454084689288, 5.0953011013449582627e-13],
    [-25.5, -25.500000000008423464, 0.99999999999157653625, 0.039215686273849140098, -0.0015378700492942044153, 6.6066382385763360309e-13],
    [-25.25, -25.250000000010815942, 0.99999999998918405844, 0.039603960395182895718, -0.0015684736781604361427, 8.5670824212417852996e-13],
    [-25.0, -25.000000000013887944, 0.99999999998611205614, 0.039999999998888964491, -0.0015999999988445230705, 1.1110355091354016524e-12],
    [-24.75, -24.750000000017832473, 0.99999999998216752709, 0.040404040402599396129, -0.0016324864794720990026, 1.4410079116666182734e-12],
    [-24.5, -24.500000000022897348, 0.99999999997710265154, 0.040816326528743073595, -0.0016659725095080970075, 1.8691713023966020143e-12],
    [-24.25, -24.250000000029400777, 0.99999999997059922261, 0.041237113399637049287, -0.0017004995192097111136, 2.4248063826298640823e-12],
    [-24.0, -24.000000000037751345, 0.99999999996224865456, 0.041666666663520721213, -0.0017361111078340845972, 3.1459454530908600988e-12],
    [-23.75, -23.750000000048473687, 0.99999999995152631294, 0.042105263153812742142, -0.0017728531813416997064, 4.0819946992255799662e-12],
    [-23.5, -23.500000000062241446, 0.99999999993775855377, 0.042553191484064557768, -0.0018107741004077304394, 5.2971443586027099412e-12],
    [-23.25, -23.250000000079919599, 0.99999999992008040108, 0.043010752681297238802, -0.0018499248396326039126, 6.8748042067949032581e-12],
    [-23.0, -23.000000000102618796, 0.99999999989738120369, 0.043478260860641843799, -0.0018903591589306196177, 8.9233735891214290103e-12],
    [-22.75, -22.750000000131765143, 0.99999999986823485732, 0.043956043944460207237, -0.00193213378817274382, 1.1583748802769798402e-11],
    [-22.5, -22.500000000169189792, 0.99999999983081020777, 0.044444444429405351802, -0.0019753086262678118841, 1.5039092635289981596e-11],
    [-22.25, -22.250000000217243993, 0.99999999978275600654, 0.04494382020519155115, -0.0020199469559866770482, 1.9527549961269382927e-11],
    [-22.0, -22.000000000278946809, 0.99999999972105319079, 0.045454545429186653708, -0.0020661156759678652475, 2.5358800815967926484e-11],
    [-21.75, -21.750000000358174793, 0.9999999996418252071, 0.045977011461317260423, -0.0021138855514927666611, 3.2935613104842422486e-11],
    [-21.5, -21.500000000459905538, 0.99999999954009446235, 0.046511627864194833707, -0.002163331485785291108, 4.2781910420388768721e-11],
    [-21.25, -21.2500000005905304, 0.99999999940946960045, 0.047058823473832432984, -0.0022145328137774886866, 5.5579331623482293022e-11],
    [-21.0, -21.000000000758256043, 0.99999999924174395778, 0.047619047546832757884, -0.0022675736204914606953, 7.2214860999179216286e-11],
    [-20.75, -20.750000000973620031, 0.99999999902637996965, 0.048192770990494454906, -0.002322543086421898607, 9.3842894217755439793e-11],
    [-20.5, -20.500000001250152866, 0.99999999874984713518, 0.048780487682911915627, -0.0023795358625661555661, 1.2196613269611842821e-10],
    [-20.25, -20.250000001605228054, 0.99999999839477194739, 0.049382715890841673816, -0.0024386524780437320371, 1.5854104146948969968e-10],
    [-20.0, -20.00000000206115362, 0.99999999793884638181, 0.049999999793884638181, -0.0024999997835788705149, 2.0611536054451408856e-10],
    [-19.75, -19.750000002646573635, 0.9999999973534263681, 0.050632911124397606896, -0.0025636914344936889668, 2.6800745426751484181e-10],
    [-19.5, -19.500000003398267814, 0.99999999660173219205, 0.051282050933510994057, -0.0026298484172807898082, 3.4854028444124870628e-10],
    [-19.25, -19.250000004363462243, 0.9999999956365377661, 0.051948051494705222452, -0.0026985996243003009207, 4.5334671966592113346e-10],
    [-19.0, -19.000000005602796422, 0.99999999439720359385, 0.0526315783576003783, -0.0027700824816846120416, 5.8976803283915341484e-10],
    [-18.75, -18.750000007194133004, 0.99999999280586702143, 0.053333332565959148953, -0.0028444436361436424173, 7.6737416781900657327e-10],
    [-18.5, -18.500000009237449619, 0.99999999076255042336, 0.054054053055410856579, -0.0029218397070546958897, 9.9864316979985913105e-10],
    [-18.25, -18.250000011861120081, 0.99999998813887998934, 0.054794519248096437188, -0.0030024381110058464244, 1.2998487220382640957e-9],
    [-18.0, -18.000000015229979629, 0.99999998477002048724, 0.055555553863335609693, -0.0030864179668542804487, 1.6922198685448364592e-9],
    [-17.75, -17.750000019555680897, 0.99999998044431929457, 0.056338025965557103614, -0.0031739710903772652176, 2.203456851622750588e-9],
    [-17.5, -17.500000025109991242, 0.99999997489000907307, 0.057142854273143894065, -0.0032653030887521886418, 2.8697130326163721675e-9],
    [-17.25, -17.250000032241866853, 0.99999996775813366697, 0.057971010754566222257, -0.0033606345664252542188, 3.7381870393525319508e-9],
    [-17.0, -17.000000041399376331, 0.99999995860062452606, 0.058823524541249944242, -0.0034602024554413190689, 4.8705141567315975319e-9],
    [-16.75, -16.750000053157851131, 0.99999994684215028151, 0.0597014861901074963, -0.0035642614850396245278, 6.3472049243243485245e-9],
    [-16.5, -16.500000068256031434, 0.99999993174397089554, 0.060606052332602532792, -0.0036730858073062813114, 8.2734563791281186804e-9],
    [-16.25, -16.250000087642478354, 0.99999991235752548677, 0.061538450751695444525, -0.0037869707979545711057, 1.0786763257799837646e-8],
    [-16.0, -16.000000112535168387, 0.99999988746483794491, 0.062499985933104743113, -0.003906235053925372578, 1.4066890507826218076e-8],
    [-15.75, -15.750000144498014171, 0.99999985550199626875, 0.063492045143110637302, -0.0040312226125171386763, 1.8348944900601290616e-8],
    [-15.5, -15.500000185539119049, 0.99999981446089816317, 0.064516105091728795247, -0.0041623054202318691031, 2.3940515943557544456e-8],
    [-15.25, -15.250000238236938372, 0.99999976176309000666, 0.065573739247618361529, -0.0042998860835352058028, 3.1244162586609072874e-8],
    [-15.0, -15.000000305902273714, 0.99999969409777307438, 0.066666625879703076583, -0.0044444009383624251786, 4.078692615962195484e-8],
    [-14.75, -14.750000392786277408, 0.99999960721379973296, 0.067796556910345726502, -0.0045963234805595765703, 5.3259083040565155402e-8],
    [-14.5, -14.500000504347535385, 0.99999949565259179855, 0.06896544767621955842, -0.0047561682056490957333, 6.9565054496935686445e-8],
    [-14.25, -14.250000647595007895, 0.99999935240520179507, 0.070175347705993234396, -0.004924494913490216322, 9.0890321413109033545e-8],
    [-14.0, -14.000000831528373384, 0.99999916847197233587, 0.071428452638853190838, -0.0051019135417271957354, 1.1878942190695709577e-7],
    [-13.75, -13.750001067703440039, 0.99999893229712995585, 0.072727117425037084488, -0.0052890896015692345477, 1.5530173819321091802e-7],
    [-13.5, -13.500001370958146621, 0.99999862904279314216, 0.074073870969302687727, -0.0054867503006405940269, 2.031039360432605875e-7],
    [-13.25, -13.250001760344762748, 0.99999823965678665751, 0.075471432401024401134, -0.0056956914506260628393, 2.6571077991376742811e-7],
    [-13.0, -13.00000226032685244, 0.99999773967570209643, 0.076922729180877245604, -0.0059167852724999669476, 3.4773984165059625729e-7],
    [-12.75, -12.750002902316196927, 0.9999970976880147889, 0.078430917284394476691, -0.0061509892295898732718, 4.5526066117888834395e-7],
    [-12.5, -12.500003726646228124, 0.99999627336071581344, 0.07999940373771453015, -0.0063993560389537470189, 5.9625561932304128022e-7],
    [-12.25, -12.250004785105943491, 0.99999521490550510988, 0.081631871821306956715, -0.0066630450349478722554, 7.812287026483711644e-7],
    [-12.0, -12.000006144193477733, 0.99999385582539778528, 0.083332309304232964214, -0.0069433350858775248219, 1.0240102250056643899e-6],
    [-11.75, -11.750007889293706641, 0.99999211073741375497, 0.085105040125517234888, -0.0072416392957298445218, 1.3428214239718522265e-6],
    [-11.5, -11.500010130042289579, 0.99998987000901912608, 0.086954760001568543666, -0.0075595217586817591625, 1.761684023095846308e-6],
    [-11.25, -11.250013007213059905, 0.99998699287153352397, 0.088886576510494848705, -0.0078987166748384603135, 2.3122881626141217467e-6],
    [-11.0, -11.000016701561318394, 0.99998329857815190482, 0.090906054286936709967, -0.0082611501819195911911, 3.0364700081704076545e-6],
    [-10.75, -10.750021445178367108, 0.99997855505157908605, 0.09301926605610773694, -0.0086489653096779101947, 3.9895011689674562466e-6],
    [-10.5, -10.500027536070228686, 0.99997246430888541653, 0.095232850344549603148, -0.0090645505217856196688, 5.2444602882826488196e-6],
    [-10.25, -10.25003535687578871, 0.99996464374925825569, 0.097554076829123562085, -0.0095105723734408786813, 6.8980489047297482982e-6],
    [-10.0, -10.000045398899216865, 0.99995460213129756561, 0.099990920426259513121, -0.0099900128810787609779, 9.0783371980226391307e-6],
    [-9.75, -9.7500582929646629898, 0.99994170873433886136, 0.10255214538140284335, -0.010506212271366550853, 0.000011955091783038767376],
    [-9.5, -9.5000748490286292672, 0.99992515377248938877, 0.10524740079420829237, -0.011062917846642380532, 0.000015753562626497754196],
    [-9.25, -9.2500961070336324846, 0.99990389758450052605, 0.1080873292074595732, -0.011664339767330719456, 0.000020772910324717980419],
    [-9.0, -9.0001234021897232588, 0.99987660542401376827, 0.11108369009422528184, -0.012315214599410620447, 0.000027410866906611005958],
    [-8.75, -8.7501584487714461358, 0.99984156378089747407, 0.1142495002927765655, -0.013020877492416292644, 0.000036196781931451114076],
    [-8.5, -8.5002034476721294431, 0.99979657302194479348, 0.11759919365222230435, -0.013787343818962669725, 0.000047835964067212409086],
    [-8.25, -8.250261224435227779, 0.99973880968090428058, 0.1211488023468858862, -0.014621400987813336485, 0.000063269259050753588023],
    [-8.0, -8.0003354063728957688, 0.9996646498695335219, 0.12491616246738338047, -0.015530710890733804004, 0.000083753206690805824068],
    [-7.75, -7.7504306497976388198, 0.99956944291867538508, 0.12892114655965816389, -0.016523922987846386012, 0.00011096802651783371602],
    [-7.5, -7.5005529314753607964, 0.99944722136307640048, 0.13318592569682037346, -0.017610797273522140354, 0.00014716327522080795135],
    [-7.25, -7.2507099223343393073, 0.99929032960089941184, 0.1377352633381791481, -0.018802335145397060822, 0.000195354542813809995],
    [-7.0, -7.0009114664537742447, 0.99908894880559935464, 0.1425968425158855299, -0.020110914307948839552, 0.00025958933255291114439],
    [-6.75, -6.7511701946758545583, 0.99883048973494448519, 0.14780162658813169931, -0.02155042097282086076, 0.00034530672636462180842],
    [-6.5, -6.5015023101597542838, 0.99849881774326300847, 0.15338425161331169491, -0.023136368337872860889, 0.00045982411637114291287],
    [-6.25, -6.2519285932042193808, 0.99807326533667252459, 0.15938344490773520787, -0.024885984031040958771, 0.00061299585574334665529],
    [-6.0, -6.0024756851377304495, 0.99752737684336522567, 0.16584245894778840856, -0.02681824006084471882, 0.00081810393179343481826],
    [-5.75, -5.7531777264714099267, 0.9968273171575148105, 0.17280950162000515148, -0.028953785698760482135, 0.0010930605096169818082],
    [-5.5, -5.5040784432705707209, 0.99592986228410387267, 0.18033813173967413552, -0.031314725154533563847, 0.0014620270926512764819],
    [-5.25, -5.2552337981517430318, 0.9947798743064416029, 0.18848757116435870587, -0.033924156038429525473, 0.0019575851621466424603],
    [-5.0, -5.0067153484891180686, 0.99330714907571514444, 0.19732285963028605778, -0.03680534925774114959, 0.0026236271065290251752],
    [-4.75, -4.7586144837621755578, 0.99142251458628801501, 0.20691474298370021685, -0.039980403930172869599, 0.0035191695969285907311],
    [-4.5, -4.5110477448485938163, 0.98901305736940681996, 0.21733913660862525332, -0.043468150480927729958, 0.0047233139720388284539],
    [-4.25, -4.2641634569315049757, 0.98593637295675452576, 0.22867594021494330624, -0.047281001726982439678, 0.0063415686552445379889],
    [-4.0, -4.0181499279178097404, 0.98201379003790844197, 0.24100689501895422099, -0.051420370648092997036, 0.0085136679641945650733],
    [-3.75, -3.7732454643724250282, 0.97702263008997438505, 0.25441206938131967202, -0.055870199631262064851, 0.011422801903372320069],
    [-3.5, -3.5297504182726205652, 0.97068776924864368113, 0.26896443957065353208, -0.060588111946052117828, 0.015305703243806993792],
    [-3.25, -3.2880413716877831286, 0.9626731126558705398, 0.2847219154805357168, -0.06549376425534752632, 0.020462161619762457939],
    [-3.0, -3.0485873515737420588, 0.95257412682243321912, 0.30171608454828881275, -0.070454255028821515816, 0.027261049773962319078],
    [-2.75, -2.8119675890031986246, 0.93991334982599237798, 0.31993698169163082035, -0.075267088146139169708, 0.036137678497918265361],
    [-2.5, -2.5788897342925496233, 0.92414181997875644881, 0.33931345598300515905, -0.079642409157115538072, 0.047574268676347254219],
    [-2.25, -2.3502065589167472117, 0.90465053510089050603, 0.35968936453412489425, -0.083188211399555081438, 0.062052130445130656884],
    [-2.0, -2.1269280110429724964, 0.88079707797788244406, 0.38079707797788244406, -0.085404953585434704681, 0.079962501056153062524],
    [-1.75, -1.9102241504380872269, 0.85195280196831053029, 0.40223177367806917748, -0.085699041888433597059, 0.10146636391893782704],
    [-1.5, -1.7014132779827524095, 0.81757447619364365961, 0.42343263492485821281, -0.083426487189461666538, 0.12630695037967023159],
    [-1.25, -1.501929081345372889, 0.777299861174691147, 0.4436797778795058352, -0.077976163115609440307, 0.15360618688542049523],
    [-1.0, -1.313261687518222834, 0.73105857863000487925, 0.4621171572600097585, -0.068893290777046053427, 0.18171549534589681888],
    [-0.75, -1.1368710061148999437, 0.67917869917539297316, 0.47780986446771459509, -0.056026502592115381509, 0.2082247548750517572],
    [-0.5, -0.97407698418010668087, 0.62245933120185456464, 0.48983732480741825856, -0.039659800808458560834, 0.23022717940928296224],
    [-0.25, -0.82593941987884356221, 0.56217650088579810403, 0.49741200708638483222, -0.020575366444752548192, 0.24486009621375019975],
    [-0.003, -0.69464830555952343467, 0.50074999943750050625, 0.49999962500033749969, -0.0002499995500006147314, 0.24999925000143437276],
    [-7.0e-6, -0.69315068056607030942, 0.50000174999999999285, 0.49999999999795833333, -5.8333333332761666667e-7, 0.24999999999591666667],
    [0.0, -0.69314718055994530942, 0.5, 0.5, 0.0, 0.25],
    [0.00002, -0.69313718060994530942, 0.49999500000000016667, 0.49999999998333333333, 1.6666666665333333333e-6, 0.24999999996666666667],
    [0.0005, -0.6928972118099449839, 0.4998750000026041666, 0.49999998958333359375, 0.000041666664583333412388, 0.24999997916666777344],
    [0.001, -0.69264730555994010108, 0.49975000002083333125, 0.4999999583333375, 0.000083333316666669196428, 0.249999916666684375],
    [0.0123, -0.68701609169073471959, 0.49692503876747598696, 0.49999369634536797375, 0.0010249689862621907529, 0.24998739290530944412],
    [0.25, -0.57593941987884356221, 0.43782349911420189597, 0.49741200708638483222, 0.020575366444752548192, 0.24486009621375019975],
    [0.5, -0.47407698418010668087, 0.37754066879814543536, 0.48983732480741825856, 0.039659800808458560834, 0.23022717940928296224],
    [0.75, -0.38687100611489994367, 0.32082130082460702684, 0.47780986446771459509, 0.056026502592115381509, 0.2082247548750517572],
    [1.0, -0.31326168751822283405, 0.26894142136999512075, 0.4621171572600097585, 0.068893290777046053427, 0.18171549534589681888],
    [1.25, -0.25192908134537288895, 0.222700138825308853, 0.4436797778795058352, 0.077976163115609440307, 0.15360618688542049523],
    [1.5, -0.2014132779827524095, 0.18242552380635634039, 0.42343263492485821281, 0.083426487189461666538, 0.12630695037967023159],
    [1.75, -0.16022415043808722689, 0.14804719803168946971, 0.40223177367806917748, 0.085699041888433597059, 0.10146636391893782704],
    [2.0, -0.12692801104297249644, 0.11920292202211755594, 0.38079707797788244406, 0.085404953585434704681, 0.079962501056153062524],
    [2.25, -0.10020655891674721167, 0.09534946489910949397, 0.35968936453412489425, 0.083188211399555081438, 0.062052130445130656884],
    [2.5, -0.078889734292549623344, 0.075858180021243551193, 0.33931345598300515905, 0.079642409157115538072, 0.047574268676347254219],
    [2.75, -0.061967589003198624576, 0.06008665017400762202, 0.31993698169163082035, 0.075267088146139169708, 0.036137678497918265361],
    [3.0, -0.048587351573742058759, 0.047425873177566780879, 0.30171608454828881275, 0.070454255028821515816, 0.027261049773962319078],
    [3.25, -0.038041371687783128561, 0.037326887344129460198, 0.2847219154805357168, 0.06549376425534752632, 0.020462161619762457939],
    [3.5, -0.029750418272620565195, 0.029312230751356318865, 0.26896443957065353208, 0.060588111946052117828, 0.015305703243806993792],
    [3.75, -0.023245464372425028196, 0.022977369910025614954, 0.25441206938131967202, 0.055870199631262064851, 0.011422801903372320069],
    [4.0, -0.018149927917809740355, 0.017986209962091558027, 0.24100689501895422099, 0.051420370648092997036, 0.0085136679641945650733],
    [4.25, -0.014163456931504975715, 0.014063627043245474244, 0.22867594021494330624, 0.047281001726982439678, 0.0063415686552445379889],
    [4.5, -0.011047744848593816322, 0.010986942630593180039, 0.21733913660862525332, 0.043468150480927729958, 0.0047233139720388284539],
    [4.75, -0.0086144837621755578298, 0.0085774854137119849882, 0.20691474298370021685, 0.039980403930172869599, 0.0035191695969285907311],
    [5.0, -0.0067153484891180686164, 0.0066928509242848555594, 0.19732285963028605778, 0.03680534925774114959, 0.0026236271065290251752],
    [5.25, -0.0052337981517430317827, 0.0052201256935583971032, 0.18848757116435870587, 0.033924156038429525473, 0.0019575851621466424603],
    [5.5, -0.0040784432705707208915, 0.0040701377158961273252, 0.18033813173967413552, 0.031314725154533563847, 0.0014620270926512764819],
    [5.75, -0.0031777264714099266643, 0.003172682842485189502, 0.17280950162000515148, 0.028953785698760482135, 0.0010930605096169818082],
    [6.0, -0.0024756851377304495309, 0.0024726231566347743341, 0.16584245894778840856, 0.02681824006084471882, 0.00081810393179343481826],
    [6.25, -0.0019285932042193807783, 0.0019267346633274754145, 0.15938344490773520787, 0.024885984031040958771, 0.00061299585574334665529],
    [6.5, -0.0015023101597542838136, 0.0015011822567369915339, 0.15338425161331169491, 0.023136368337872860889, 0.00045982411637114291287],
    [6.75, -0.0011701946758545582612, 0.0011695102650555148139, 0.14780162658813169931, 0.02155042097282086076, 0.00034530672636462180842],
    [7.0, -0.0009114664537742446917, 0.00091105119440064535786, 0.1425968425158855299, 0.020110914307948839552, 0.00025958933255291114439],
    [7.25, -0.00070992233433930726202, 0.00070967039910058815551, 0.1377352633381791481, 0.018802335145397060822, 0.000195354542813809995],
    [7.5, -0.00055293147536079637963, 0.00055277863692359951608, 0.13318592569682037346, 0.017610797273522140354, 0.00014716327522080795135],
    [7.75, -0.00043064979763881981959, 0.00043055708132461491931, 0.12892114655965816389, 0.016523922987846386012, 0.00011096802651783371602],
    [8.0, -0.00033540637289576883157, 0.00033535013046647810388, 0.12491616246738338047, 0.015530710890733804004, 0.000083753206690805824068],
    [8.25, -0.00026122443522777901603, 0.00026119031909571942265, 0.1211488023468858862, 0.014621400987813336485, 0.000063269259050753588023],
    [8.5, -0.00020344767212944309265, 0.00020342697805520651739, 0.11759919365222230435, 0.013787343818962669725, 0.000047835964067212409086],
    [8.75, -0.00015844877144613576784, 0.00015843621910252593465, 0.1142495002927765655, 0.013020877492416292644, 0.000036196781931451114076],
    [9.0, -0.00012340218972325881635, 0.00012339457598623172975, 0.11108369009422528184, 0.012315214599410620447, 0.000027410866906611005958],
    [9.25, -0.000096107033632484560159, 0.000096102415499473948795, 0.1080873292074595732, 0.011664339767330719456, 0.000020772910324717980419],
    [9.5, -0.000074849028629267164088, 0.000074846227510611231063, 0.10524740079420829237, 0.011062917846642380532, 0.000015753562626497754196],
    [9.75, -0.000058292964662989799903, 0.000058291265661138644941, 0.10255214538140284335, 0.010506212271366550853, 0.000011955091783038767376],
    [10.0, -0.000045398899216864646769, 0.000045397868702434394505, 0.099990920426259513121, 0.0099900128810787609779, 9.0783371980226391307e-6],
    [10.25, -0.000035356875788710492003, 0.000035356250741744313871, 0.097554076829123562085, 0.0095105723734408786813, 6.8980489047297482982e-6],
    [10.5, -0.000027536070228685511566, 0.000027535691114583470847, 0.095232850344549603148, 0.0090645505217856196688, 5.2444602882826488196e-6],
    [10.75, -0.000021445178367107799118, 0.000021444948420913949235, 0.09301926605610773694, 0.0086489653096779101947, 3.9895011689674562466e-6],
    [11.0, -0.000016701561318393958462, 0.000016701421848095180755, 0.090906054286936709967, 0.0082611501819195911911, 3.0364700081704076545e-6],
    [11.25, -0.000013007213059905050396, 0.00001300712846647603283, 0.088886576510494848705, 0.0078987166748384603135, 2.3122881626141217467e-6],
    [11.5, -0.000010130042289579062257, 0.000010129990980873921191, 0.086954760001568543666, 0.0075595217586817591625, 1.761684023095846308e-6],
    [11.75, -7.8892937066407887305e-6, 7.8892625862450332775e-6, 0.085105040125517234888, 0.0072416392957298445218, 1.3428214239718522265e-6],
    [12.0, -6.1441934777328054346e-6, 6.1441746022147178256e-6, 0.083332309304232964214, 0.0069433350858775248219, 1.0240102250056643899e-6],
    [12.25, -4.7851059434913028976e-6, 4.7850944948901186101e-6, 0.081631871821306956715, 0.0066630450349478722554, 7.812287026483711644e-7],
    [12.5, -3.7266462281239903127e-6, 3.7266392841865613861e-6, 0.07999940373771453015, 0.0063993560389537470189, 5.9625561932304128022e-7],
    [12.75, -2.9023161969266758305e-6, 2.9023119852110969368e-6, 0.078430917284394476691, 0.0061509892295898732718, 4.5526066117888834395e-7],
    [13.0, -2.2603268524403896957e-6, 2.2603242979035744605e-6, 0.076922729180877245604, 0.0059167852724999669476, 3.4773984165059625729e-7],
    [13.25, -1.7603447627484182669e-6, 1.760343213342485562e-6, 0.075471432401024401134, 0.0056956914506260628393, 2.6571077991376742811e-7],
    [13.5, -1.3709581466205350131e-6, 1.370957206857844579e-6, 0.074073870969302687727, 0.0054867503006405940269, 2.031039360432605875e-7],
    [13.75, -1.0677034400392618969e-6, 1.067702870044146823e-6, 0.072727117425037084488, 0.0052890896015692345477, 1.5530173819321091802e-7],
    [14.0, -8.3152837338375418768e-7, 8.3152802766413214179e-7, 0.071428452638853190838, 0.0051019135417271957354, 1.1878942190695709577e-7],
    [14.25, -6.4759500789452853521e-7, 6.475947982049266749e-7, 0.070175347705993234396, 0.004924494913490216322, 9.0890321413109033545e-8],
    [14.5, -5.0434753538464847009e-7, 5.0434740820145162732e-7, 0.06896544767621955842, 0.0047561682056490957333, 6.9565054496935686445e-8],
    [14.75, -3.927862774075639428e-7, 3.9278620026704418286e-7, 0.067796556910345726502, 0.0045963234805595765703, 5.3259083040565155402e-8],
    [15.0, -3.059022737137204859e-7, 3.0590222692562472515e-7, 0.066666625879703076583, 0.0044444009383624251786, 4.078692615962195484e-8],
    [15.25, -2.3823693837176013583e-7, 2.3823690999334298705e-7, 0.065573739247618361529, 0.0042998860835352058028, 3.1244162586609072874e-8],
    [15.5, -1.8553911904921441077e-7, 1.8553910183683312651e-7, 0.064516105091728795247, 0.0041623054202318691031, 2.3940515943557544456e-8],
    [15.75, -1.4449801417108592326e-7, 1.4449800373124837641e-7, 0.063492045143110637302, 0.0040312226125171386763, 1.8348944900601290616e-8],
    [16.0, -1.1253516838717681502e-7, 1.1253516205509499058e-7, 0.062499985933104743113, 0.003906235053925372578, 1.4066890507826218076e-8],
    [16.25, -8.7642478353834244686e-8, 8.7642474513232350885e-8, 0.061538450751695444525, 0.0037869707979545711057, 1.0786763257799837646e-8],
    [16.5, -6.8256031433905731001e-8, 6.8256029104462870448e-8, 0.060606052332602532792, 0.0036730858073062813114, 8.2734563791281186804e-9],
    [16.75, -5.3157851131365621967e-8, 5.315784971848707855e-8, 0.0597014861901074963, 0.0035642614850396245278, 6.3472049243243485245e-9],
    [17.0, -4.1399376330897474477e-8, 4.1399375473943306009e-8, 0.058823524541249944242, 0.0034602024554413190689, 4.8705141567315975319e-9],
    [17.25, -3.2241866852798338444e-8, 3.2241866333029354953e-8, 0.057971010754566222257, 0.0033606345664252542188, 3.7381870393525319508e-9],
    [17.5, -2.5109991242183985306e-8, 2.5109990926928157853e-8, 0.057142854273143894065, 0.0032653030887521886418, 2.8697130326163721675e-9],
    [17.75, -1.9555680896638166488e-8, 1.9555680705425840069e-8, 0.056338025965557103614, 0.0031739710903772652176, 2.203456851622750588e-9],
    [18.0, -1.5229979628736488102e-8, 1.5229979512760348944e-8, 0.055555553863335609693, 0.0030864179668542804487, 1.6922198685448364592e-9],
    [18.25, -1.1861120081000744767e-8, 1.1861120010657660257e-8, 0.054794519248096437188, 0.0030024381110058464244, 1.2998487220382640957e-9],
    [18.5, -9.2374496193053570319e-9, 9.2374495766401194287e-9, 0.054054053055410856579, 0.0029218397070546958897, 9.9864316979985913105e-10],
    [18.75, -7.1941330044476086006e-9, 7.1941329785698338198e-9, 0.053333332565959148953, 0.0028444436361436424173, 7.6737416781900657327e-10],
    [19.0, -5.6027964218416036384e-9, 5.6027964061459397954e-9, 0.0526315783576003783, 0.0027700824816846120416, 5.8976803283915341484e-10],
    [19.25, -4.3634622434238001045e-9, 4.3634622339038987435e-9, 0.051948051494705222452, 0.0026985996243003009207, 4.5334671966592113346e-10],
    [19.5, -3.3982678137209591517e-9, 3.3982678079468470914e-9, 0.051282050933510994057, 0.0026298484172807898082, 3.4854028444124870628e-10],
    [19.75, -2.6465736354069409938e-9, 2.6465736319047649931e-9, 0.050632911124397606896, 0.0025636914344936889668, 2.6800745426751484181e-10],
    [20.0, -2.0611536203143807032e-9, 2.0611536181902035814e-9, 0.049999999793884638181, 0.0024999997835788705149, 2.0611536054451408856e-10],
    [20.25, -1.6052280538972330555e-9, 1.6052280526088545036e-9, 0.049382715890841673816, 0.0024386524780437320371, 1.5854104146948969968e-10],
    [20.5, -1.2501528656053015349e-9, 1.2501528648238604416e-9, 0.048780487682911915627, 0.0023795358625661555661, 1.2196613269611842821e-10],
    [20.75, -9.7362003082698855858e-10, 9.7362003035302057652e-10, 0.048192770990494454906, 0.002322543086421898607, 9.3842894217755439793e-11],
    [21.0, -7.5825604250371455972e-10, 7.582560422162384468e-10, 0.047619047546832757884, 0.0022675736204914606953, 7.2214860999179216286e-11],
    [21.25, -5.9053039972004089777e-10, 5.9053039954567782131e-10, 0.047058823473832432984, 0.0022145328137774886866, 5.5579331623482293022e-11],
    [21.5, -4.5990553775947512606e-10, 4.5990553765371857425e-10, 0.046511627864194833707, 0.002163331485785291108, 4.2781910420388768721e-11],
    [21.75, -3.581747929641734824e-10, 3.5817479290002889125e-10, 0.045977011461317260423, 0.0021138855514927666611, 3.2935613104842422486e-11],
    [22.0, -2.7894680924798681957e-10, 2.7894680920908115838e-10, 0.045454545429186653708, 0.0020661156759678652475, 2.5358800815967926484e-11],
    [22.25, -2.1724399348430421947e-10, 2.1724399346070674312e-10, 0.04494382020519155115, 0.0020199469559866770482, 1.9527549961269382927e-11],
    [22.5, -1.6918979224720044323e-10, 1.6918979223288785033e-10, 0.044444444429405351802, 0.0019753086262678118841, 1.5039092635289981596e-11],
    [22.75, -1.3176514269227364171e-10, 1.317651426835926153e-10, 0.043956043944460207237, 0.00193213378817274382, 1.1583748802769798402e-11],
    [23.0, -1.0261879631175359436e-10, 1.0261879630648828568e-10, 0.043478260860641843799, 0.0018903591589306196177, 8.9233735891214290103e-12],
    [23.25, -7.9919598926345748397e-11, 7.9919598923152177251e-11, 0.043010752681297238802, 0.0018499248396326039126, 6.8748042067949032581e-12],
    [23.5, -6.2241446227140833507e-11, 6.2241446225203834693e-11, 0.042553191484064557768, 0.0018107741004077304394, 5.2971443586027099412e-12],
    [23.75, -4.8473687061527706279e-11, 4.847368706035285711e-11, 0.042105263153812742142, 0.0017728531813416997064, 4.0819946992255799662e-12],
    [24.0, -3.7751345442078395475e-11, 3.7751345441365813434e-11, 0.041666666663520721213, 0.0017361111078340845972, 3.1459454530908600988e-12],
    [24.25, -2.9400777392412521987e-11, 2.9400777391980319131e-11, 0.041237113399637049287, 0.0017004995192097111136, 2.4248063826298640823e-12],
    [24.5, -2.2897348456193384658e-11, 2.2897348455931240375e-11, 0.040816326528743073595, 0.0016659725095080970075, 1.8691713023966020143e-12],
    [24.75, -1.7832472907987390949e-11, 1.7832472907828392403e-11, 0.040404040402599396129, 0.0016324864794720990026, 1.4410079116666182734e-12],
    [25.0, -1.3887943864867583102e-11, 1.388794386477114561e-11, 0.039999999998888964491, 0.0015999999988445230705, 1.1110355091354016524e-12],
    [25.25, -1.0815941557227200012e-11, 1.0815941557168707716e-11, 0.039603960395182895718, 0.0015684736781604361427, 8.5670824212417852996e-13],
    [25.5, -8.4234637544331700351e-12, 8.4234637543976926643e-12, 0.039215686273849140098, 0.0015378700492942044153, 6.6066382385763360309e-13],
    [25.75, -6.5602001681322605551e-12, 6.560200168110742442e-12, 0.038834951455801149502, 0.001508153454084689288, 5.0953011013449582627e-13],
    [26.0, -5.1090890280502733245e-12, 5.1090890280372219292e-12, 0.03846153846114545469, 0.0014792899404202798705, 3.9300684830453181208e-13],
    [26.25, -3.9789625358293240229e-12, 3.9789625358214079515e-12, 0.038095238094934936188, 0.001451247165218171852, 3.0315905034467897317e-13],
    [26.5, -3.0988191387170241016e-12, 3.0988191387122227616e-12, 0.037735849056369900442, 0.0014239943037800853647, 2.3387314254214450728e-13],
    [26.75, -2.4133627718303018855e-12, 2.4133627718273897256e-12, 0.037383177569913019606, 0.0013975019650499549182, 1.8043833807924611334e-13],
    [27.0, -1.8795288165373169805e-12, 1.8795288165355506662e-12, 0.03703703703689781268, 0.0013717421123384724092, 1.3922435677962613189e-13],
    [27.25, -1.4637785141248376038e-12, 1.46377851412376628e-12, 0.036697247706314585063, 0.0013466879891151202949, 1.0743328543980464862e-13],
    [27.5, -1.1399918530437055546e-12, 1.1399918530430557639e-12, 0.036363636363553455138, 0.0013223140495008535066, 8.2908498402847783245e-14],
    [27.75, -8.8782654784557172674e-13, 8.8782654784517760875e-13, 0.036036036035972048537, 0.0012985958931241944303, 6.3987498943626155014e-14],
    [28.0, -6.914400106937812563e-13, 6.9144001069354221165e-13, 0.035714285714236325714, 0.0012755102040304802033, 4.9388572192293424556e-14],
    [28.25, -5.3849402177525857875e-13, 5.3849402177511359084e-13, 0.035398230088457451751, 0.0012530346933586004852, 3.8123470568088046967e-14],
    [28.5, -4.1937956583786650292e-13, 4.1937956583777856331e-13, 0.03508771929821618389, 0.0012311480455220149038, 2.9430144971035152677e-14],
    [28.75, -3.2661313427869137553e-13, 3.2661313427863803746e-13, 0.034782608695629452999, 0.0012098298676513470167, 2.2720913688926470194e-14],
    [29.0, -2.5436656473765993986e-13, 2.5436656473762758868e-13, 0.034482758620672112651, 0.0011890606420745992938, 1.7542521706029895285e-14],
    [29.25, -1.9810087980487833493e-13, 1.9810087980485871295e-13, 0.034188034188020642675, 0.0011688216816281860142, 1.354535930288827221e-14],
    [29.5, -1.5428112031917688197e-13, 1.5428112031916498063e-13, 0.033898305084735302975, 0.0011490950876076861266, 1.0459736970786004925e-14],
    [29.75, -1.201542573177106389e-13, 1.2015425731770342038e-13, 0.033613445378143182907, 0.0011298637101816092233, 8.0775971305989989407e-15],
    [30.0, -9.3576229688397367794e-14, 9.3576229688392989538e-14, 0.033333333333327094918, 0.0011111111111046647486, 6.2384153125577813337e-15],
];
/// Rows `p, K_T^0(p)` at mu = 1, T = 0.3, Delta_0 = 0.2.
pub const KT0: [[f64; 2]; 49] = [
    [0.0, 1.0902700148657397466],
    [0.125, 1.0776629116042160076],
    [0.25, 1.0404643374659259723],
    [0.375, 0.98072114637483782857],
    [0.5, 0.90247635604769526123],
    [0.625, 0.81281396540318427643],
    [0.75, 0.7233667909584642859],
    [0.875, 0.65183532500346451014],
    [1.0, 0.62205933592388874028],
    [1.125, 0.66019855240144529205],
    [1.25, 0.78605630321282976077],
    [1.375, 1.0042619134416871321],
    [1.5, 1.3036809625560561487],
    [1.625, 1.666209746406903238],
    [1.75, 2.0763248865947213497],
    [1.875, 2.5246845713303856408],
    [2.0, 3.0069262985003175661],
    [2.125, 3.5213655432333953115],
    [2.25, 4.0674306209515627068],
    [2.375, 4.6449345179144914765],
    [2.5, 5.2538084031894883619],
    [2.625, 5.8940192821533909546],
    [2.75, 6.5655469158289439511],
    [2.875, 7.2683771673583761776],
    [3.0, 8.0024996095386569161],
    [3.125, 8.7679063430608891589],
    [3.25, 9.5645912745921984167],
    [3.375, 10.39254963378214469],
    [3.5, 11.251777637333579392],
    [3.625, 12.142272249897257248],
    [3.75, 13.064031010756212993],
    [3.875, 14.017051906182876086],
    [4.0, 15.001333274079340979],
    [4.125, 16.016873731806247838],
    [4.25, 17.063672120912309654],
    [4.375, 18.141727464346525124],
    [4.5, 19.251038933003070523],
    [4.625, 20.391605819322444916],
    [4.75, 21.563427516283212623],
    [4.875, 22.766503500551528477],
    [5.0, 24.000833318866243066],
    [5.125, 25.266416576962887556],
    [5.25, 26.56325293050532996],
    [5.375, 27.891342077616577108],
    [5.5, 29.250683752692004379],
    [5.625, 30.641277721247607921],
    [5.75, 32.063123775608639221],
    [5.875, 33.516221731284464696],
    [6.0, 35.000571423906781697],
];
/// `int g0(2 (q^2 - 1)) dq` over the real line.
pub const G0_LINE_INTEGRAL: f64 = 2.0942754850934797666;
pub const TC_2_1: f64 = 0.86422813650807908695;
/// 0.9 T_c(2, 1).
pub const T_GAP: f64 = 0.77780532285727117826;
/// Gap at a = 2, mu = 1, T = 0.9 T_c.
pub const DELTA0_2_1: f64 = 0.86597019228824515372;
pub const C_2_1: f64 = 8.166224271127308335;
/// a = 2, mu = 1, D = 1, h = 0.1.
pub const DELTA0_ASYMPTOTIC: f64 = 0.28576606291033419938;
/// Rows `x, alpha0(x)` for the gap at 0.9 T_c(2, 1), mu = 1.
pub const ALPHA0: [[f64; 2]; 5] = [
    [0.0, 0.21649254807206128843],
    [0.5, 0.11655251424616242287],
    [1.0, 0.043504684267601240629],
    [2.0, -0.013796673681940949594],
    [4.0, 0.00066494947515534795267],
];
pub const B1_2_1_1: f64 = 0.17783212754755506681;
pub const B2_2_1_1: f64 = 0.042438469855465486664;
pub const B3_2_1_1: f64 = 0.2764137434004611288;
pub const B1_ALT_2_1_1: f64 = 0.17783212754755506681;
pub const GL_ENERGY_SAMPLE: f64 = 0.080005073175833163654;
/// `||1 + 0.3 e^{2 pi i x}||_4^4`.
pub const L4_FOURTH: f64 = 1.3681;
/// Minimum of the GL functional with W = 0.5 cos(2 pi x), coefficients at (2, 1, 1).
pub const GL_MIN_HALF_COS: f64 = -0.000027704456698697445954;
pub const BETA_C_2_1: f64 = 1.1571018782615759853;
pub const E1_SAMPLE: f64 = -0.26;
pub const E2_SAMPLE: f64 = 0.079029391175982210142;
/// `-T int ln(1 + e^{-beta((hq)^2 - mu)}) dq/2pi` at h = 0.2, mu = 1, T = 0.5.
pub const NORMAL_FREE_ENERGY: f64 = -1.408127257030793055;
