#include "language_corpora.hpp"

#include <array>

namespace tourney::detail {

namespace {

constexpr std::string_view kEn =
    "To solve this problem we first need to find the total number of apples. The farmer has "
    "twelve baskets and each basket contains seven apples, so the total is the product of these "
    "two numbers. Next we subtract the apples that were sold at the market on Monday and "
    "Tuesday. Let us define the unknown value as the number of students in the class. If we "
    "multiply both sides of the equation by three, we get a simpler expression. Therefore the "
    "answer is the sum of the remaining terms. We can check our solution by substituting the "
    "value back into the original equation. The probability that a randomly chosen card is red "
    "equals one half. Since the triangle is right angled, we apply the theorem of Pythagoras to "
    "compute the length of the hypotenuse. The area of the circle is pi times the square of the "
    "radius. How many ways can we arrange the letters of the word? We count the possibilities "
    "and divide by the number of repeated arrangements. This means that the final result must "
    "be an integer greater than zero. Finally, we simplify the fraction and write the answer in "
    "the box. She bought three notebooks and two pens for her brother, and he paid the rest "
    "with his own money. What is the smallest positive integer that satisfies all of the given "
    "conditions? The function is increasing on the interval, so its maximum occurs at the right "
    "endpoint. Each of the numbers is divisible by four, which gives us another way to verify "
    "the result. It is important to remember that the order does not matter here. There are "
    "more red balls than blue balls in the bag, and they are all the same size. I think we "
    "should consider every case carefully before we make a conclusion about the problem. "
    "Step one: let me calculate the cost. Then we add them together and get the correct value. "
    "Wait, I made a mistake, so let me recheck the calculation. Notice that the answer would "
    "be different if we had used the other formula. Thus, we have found what the question asked."
    " One, two, three, four, five, six, seven, eight, nine and ten are numbers. The result of"
    " multiplying six by seven is forty two. To add, subtract, multiply or divide we use the "
    "correct operation. The cat eats fish every day in the kitchen. The dog runs quickly on "
    "the street and barks loudly. First we calculate the value, then we check the answer, and"
    " finally we write the result. The correct answer is the number we are looking for.";

constexpr std::string_view kEs =
    "Para resolver este problema primero necesitamos encontrar el número total de manzanas. El "
    "granjero tiene doce cestas y cada cesta contiene siete manzanas, así que el total es el "
    "producto de estos dos números. Luego restamos las manzanas que se vendieron en el mercado "
    "el lunes y el martes. Definamos el valor desconocido como el número de estudiantes en la "
    "clase. Si multiplicamos ambos lados de la ecuación por tres, obtenemos una expresión más "
    "sencilla. Por lo tanto, la respuesta es la suma de los términos restantes. Podemos "
    "comprobar nuestra solución sustituyendo el valor en la ecuación original. La probabilidad "
    "de que una carta elegida al azar sea roja es igual a un medio. Como el triángulo es "
    "rectángulo, aplicamos el teorema de Pitágoras para calcular la longitud de la hipotenusa. "
    "El área del círculo es pi por el cuadrado del radio. ¿De cuántas maneras podemos ordenar "
    "las letras de la palabra? Contamos las posibilidades y dividimos entre el número de "
    "ordenaciones repetidas. Esto significa que el resultado final debe ser un entero mayor que "
    "cero. Finalmente, simplificamos la fracción y escribimos la respuesta en la caja. Ella "
    "compró tres cuadernos y dos bolígrafos para su hermano, y él pagó el resto con su propio "
    "dinero. ¿Cuál es el menor entero positivo que cumple todas las condiciones dadas? La "
    "función es creciente en el intervalo, por lo que su máximo ocurre en el extremo derecho. "
    "Cada uno de los números es divisible entre cuatro, lo cual nos da otra forma de verificar "
    "el resultado. Es importante recordar que aquí el orden no importa. Hay más bolas rojas que "
    "bolas azules en la bolsa, y todas tienen el mismo tamaño. Creo que debemos considerar cada "
    "caso con cuidado antes de llegar a una conclusión sobre el problema. Paso uno: calculemos "
    "el costo. Después sumamos todo y obtenemos el valor correcto. Espera, cometí un error, así "
    "que revisemos el cálculo otra vez. Observa que la respuesta sería diferente si usáramos la "
    "otra fórmula. Así hemos encontrado lo que la pregunta pedía. El gato come pescado."
    " Uno, dos, tres, cuatro, cinco, seis, siete, ocho, nueve y diez son números. El "
    "resultado de multiplicar seis por siete es cuarenta y dos. Para sumar, restar, "
    "multiplicar o dividir usamos la operación correcta. El perro corre rápidamente por la "
    "calle y ladra fuerte. Primero calculamos el valor, luego comprobamos la respuesta y "
    "finalmente escribimos el resultado. La respuesta correcta es el número que buscamos.";

constexpr std::string_view kFr =
    "Pour résoudre ce problème, nous devons d'abord trouver le nombre total de pommes. Le "
    "fermier a douze paniers et chaque panier contient sept pommes, donc le total est le "
    "produit de ces deux nombres. Ensuite, nous soustrayons les pommes qui ont été vendues au "
    "marché lundi et mardi. Définissons la valeur inconnue comme le nombre d'élèves dans la "
    "classe. Si nous multiplions les deux côtés de l'équation par trois, nous obtenons une "
    "expression plus simple. Par conséquent, la réponse est la somme des termes restants. Nous "
    "pouvons vérifier notre solution en remplaçant la valeur dans l'équation initiale. La "
    "probabilité qu'une carte choisie au hasard soit rouge est égale à un demi. Comme le "
    "triangle est rectangle, nous appliquons le théorème de Pythagore pour calculer la longueur "
    "de l'hypoténuse. L'aire du cercle est égale à pi fois le carré du rayon. De combien de "
    "façons pouvons-nous ranger les lettres du mot ? Nous comptons les possibilités et nous "
    "divisons par le nombre d'arrangements répétés. Cela signifie que le résultat final doit "
    "être un entier supérieur à zéro. Enfin, nous simplifions la fraction et nous écrivons la "
    "réponse dans la boîte. Elle a acheté trois cahiers et deux stylos pour son frère, et il a "
    "payé le reste avec son propre argent. Quel est le plus petit entier positif qui satisfait "
    "toutes les conditions données ? La fonction est croissante sur l'intervalle, donc son "
    "maximum est atteint à l'extrémité droite. Chacun des nombres est divisible par quatre, ce "
    "qui nous donne une autre façon de vérifier le résultat. Il est important de se rappeler "
    "que l'ordre n'a pas d'importance ici. Il y a plus de boules rouges que de boules bleues "
    "dans le sac, et elles ont toutes la même taille. Je pense que nous devons examiner chaque "
    "cas avec soin avant de conclure sur ce problème. Première étape : calculons le coût. "
    "Ensuite nous additionnons tout et nous obtenons la bonne valeur. Attendez, j'ai fait une "
    "erreur, alors vérifions encore le calcul. Remarquez que la réponse serait différente avec "
    "l'autre formule. Ainsi, nous avons trouvé ce que la question demandait."
    " Un, deux, trois, quatre, cinq, six, sept, huit, neuf et dix sont des nombres. Le "
    "résultat de la multiplication de six par sept est quarante-deux. Pour additionner, "
    "soustraire, multiplier ou diviser, nous utilisons la bonne opération. Le chien court "
    "vite dans la rue et aboie fort. D'abord nous calculons la valeur, ensuite nous vérifions"
    " la réponse et enfin nous écrivons le résultat. La bonne réponse est le nombre que nous "
    "cherchons.";

constexpr std::string_view kDe =
    "Um dieses Problem zu lösen, müssen wir zuerst die Gesamtzahl der Äpfel finden. Der Bauer "
    "hat zwölf Körbe und jeder Korb enthält sieben Äpfel, also ist die Summe das Produkt "
    "dieser beiden Zahlen. Danach ziehen wir die Äpfel ab, die am Montag und Dienstag auf dem "
    "Markt verkauft wurden. Wir bezeichnen den unbekannten Wert als die Anzahl der Schüler in "
    "der Klasse. Wenn wir beide Seiten der Gleichung mit drei multiplizieren, erhalten wir "
    "einen einfacheren Ausdruck. Daher ist die Antwort die Summe der übrigen Terme. Wir können "
    "unsere Lösung überprüfen, indem wir den Wert in die ursprüngliche Gleichung einsetzen. Die "
    "Wahrscheinlichkeit, dass eine zufällig gewählte Karte rot ist, beträgt einhalb. Da das "
    "Dreieck rechtwinklig ist, wenden wir den Satz des Pythagoras an, um die Länge der "
    "Hypotenuse zu berechnen. Die Fläche des Kreises ist pi mal das Quadrat des Radius. Auf "
    "wie viele Arten können wir die Buchstaben des Wortes anordnen? Wir zählen die "
    "Möglichkeiten und teilen durch die Anzahl der wiederholten Anordnungen. Das bedeutet, dass "
    "das Endergebnis eine ganze Zahl größer als null sein muss. Schließlich vereinfachen wir "
    "den Bruch und schreiben die Antwort in das Kästchen. Sie kaufte drei Hefte und zwei "
    "Stifte für ihren Bruder, und er bezahlte den Rest mit seinem eigenen Geld. Was ist die "
    "kleinste positive ganze Zahl, die alle gegebenen Bedingungen erfüllt? Die Funktion ist "
    "auf dem Intervall wachsend, also liegt ihr Maximum am rechten Endpunkt. Jede der Zahlen "
    "ist durch vier teilbar, was uns eine weitere Möglichkeit gibt, das Ergebnis zu prüfen. Es "
    "ist wichtig, sich daran zu erinnern, dass die Reihenfolge hier keine Rolle spielt. Es gibt "
    "mehr rote Kugeln als blaue Kugeln in der Tasche, und sie sind alle gleich groß. Ich denke, "
    "wir sollten jeden Fall sorgfältig betrachten, bevor wir eine Schlussfolgerung über das "
    "Problem ziehen. Schritt eins: berechnen wir die Kosten. Dann addieren wir alles und "
    "bekommen den richtigen Wert. Moment, ich habe einen Fehler gemacht, also prüfen wir die "
    "Rechnung noch einmal. Beachte, dass die Antwort mit der anderen Formel anders wäre. Somit "
    "haben wir gefunden, wonach die Frage gefragt hat."
    " Eins, zwei, drei, vier, fünf, sechs, sieben, acht, neun und zehn sind Zahlen. Das "
    "Ergebnis der Multiplikation von sechs mit sieben ist zweiundvierzig. Zum Addieren, "
    "Subtrahieren, Multiplizieren oder Dividieren verwenden wir die richtige Rechenart. Die "
    "Katze frisst jeden Tag Fisch in der Küche. Zuerst berechnen wir den Wert, dann prüfen "
    "wir die Antwort und schließlich schreiben wir das Ergebnis. Die richtige Antwort ist die"
    " Zahl, die wir suchen.";

constexpr std::string_view kPt =
    "Para resolver este problema, primeiro precisamos encontrar o número total de maçãs. O "
    "fazendeiro tem doze cestas e cada cesta contém sete maçãs, então o total é o produto "
    "desses dois números. Em seguida, subtraímos as maçãs que foram vendidas no mercado na "
    "segunda-feira e na terça-feira. Vamos definir o valor desconhecido como o número de alunos "
    "na turma. Se multiplicarmos os dois lados da equação por três, obtemos uma expressão mais "
    "simples. Portanto, a resposta é a soma dos termos restantes. Podemos verificar a nossa "
    "solução substituindo o valor na equação original. A probabilidade de que uma carta "
    "escolhida ao acaso seja vermelha é igual a um meio. Como o triângulo é retângulo, "
    "aplicamos o teorema de Pitágoras para calcular o comprimento da hipotenusa. A área do "
    "círculo é pi vezes o quadrado do raio. De quantas maneiras podemos organizar as letras da "
    "palavra? Contamos as possibilidades e dividimos pelo número de arranjos repetidos. Isso "
    "significa que o resultado final deve ser um número inteiro maior que zero. Finalmente, "
    "simplificamos a fração e escrevemos a resposta na caixa. Ela comprou três cadernos e duas "
    "canetas para o seu irmão, e ele pagou o resto com o seu próprio dinheiro. Qual é o menor "
    "inteiro positivo que satisfaz todas as condições dadas? A função é crescente no "
    "intervalo, então o seu máximo ocorre na extremidade direita. Cada um dos números é "
    "divisível por quatro, o que nos dá outra maneira de verificar o resultado. É importante "
    "lembrar que a ordem não importa aqui. Há mais bolas vermelhas do que bolas azuis no saco, "
    "e todas têm o mesmo tamanho. Eu acho que devemos considerar cada caso com cuidado antes de "
    "chegar a uma conclusão sobre o problema. Passo um: vamos calcular o custo. Depois somamos "
    "tudo e obtemos o valor correto. Espere, eu cometi um erro, então vamos conferir o cálculo "
    "de novo. Note que a resposta seria diferente com a outra fórmula. Assim, encontramos o "
    "que a pergunta pedia."
    " Um, dois, três, quatro, cinco, seis, sete, oito, nove e dez são números. O resultado de"
    " multiplicar seis por sete é quarenta e dois. Para somar, subtrair, multiplicar ou "
    "dividir usamos a operação correta. O gato come peixe todos os dias na cozinha. O cão "
    "corre rapidamente pela rua e late alto. Primeiro calculamos o valor, depois verificamos "
    "a resposta e finalmente escrevemos o resultado. A resposta correta é o número que "
    "procuramos.";

constexpr std::string_view kIt =
    "Per risolvere questo problema dobbiamo prima trovare il numero totale di mele. Il "
    "contadino ha dodici cesti e ogni cesto contiene sette mele, quindi il totale è il prodotto "
    "di questi due numeri. Poi sottraiamo le mele che sono state vendute al mercato lunedì e "
    "martedì. Definiamo il valore sconosciuto come il numero di studenti nella classe. Se "
    "moltiplichiamo entrambi i lati dell'equazione per tre, otteniamo un'espressione più "
    "semplice. Quindi la risposta è la somma dei termini rimanenti. Possiamo controllare la "
    "nostra soluzione sostituendo il valore nell'equazione originale. La probabilità che una "
    "carta scelta a caso sia rossa è uguale a un mezzo. Poiché il triangolo è rettangolo, "
    "applichiamo il teorema di Pitagora per calcolare la lunghezza dell'ipotenusa. L'area del "
    "cerchio è pi greco per il quadrato del raggio. In quanti modi possiamo disporre le lettere "
    "della parola? Contiamo le possibilità e dividiamo per il numero di disposizioni ripetute. "
    "Questo significa che il risultato finale deve essere un numero intero maggiore di zero. "
    "Infine semplifichiamo la frazione e scriviamo la risposta nella casella. Lei ha comprato "
    "tre quaderni e due penne per suo fratello, e lui ha pagato il resto con i suoi soldi. "
    "Qual è il più piccolo intero positivo che soddisfa tutte le condizioni date? La funzione è "
    "crescente nell'intervallo, quindi il suo massimo si trova nell'estremo destro. Ciascuno "
    "dei numeri è divisibile per quattro, il che ci dà un altro modo per verificare il "
    "risultato. È importante ricordare che qui l'ordine non conta. Ci sono più palline rosse "
    "che palline blu nel sacchetto, e sono tutte della stessa grandezza. Penso che dovremmo "
    "considerare ogni caso con attenzione prima di arrivare a una conclusione sul problema. "
    "Primo passo: calcoliamo il costo. Poi sommiamo tutto e otteniamo il valore corretto. "
    "Aspetta, ho fatto un errore, quindi ricontrolliamo il calcolo. Nota che la risposta "
    "sarebbe diversa con l'altra formula. Così abbiamo trovato quello che chiedeva la domanda."
    " Uno, due, tre, quattro, cinque, sei, sette, otto, nove e dieci sono numeri. Il "
    "risultato di moltiplicare sei per sette è quarantadue. Per sommare, sottrarre, "
    "moltiplicare o dividere usiamo l'operazione corretta. Il gatto mangia pesce ogni giorno "
    "in cucina. Il cane corre velocemente per la strada e abbaia forte. Prima calcoliamo il "
    "valore, poi controlliamo la risposta e infine scriviamo il risultato. La risposta "
    "corretta è il numero che cerchiamo.";

constexpr std::string_view kId =
    "Untuk menyelesaikan soal ini, pertama kita perlu mencari jumlah total apel. Petani itu "
    "memiliki dua belas keranjang dan setiap keranjang berisi tujuh apel, jadi totalnya adalah "
    "hasil kali dari kedua bilangan tersebut. Selanjutnya kita kurangi apel yang dijual di "
    "pasar pada hari Senin dan Selasa. Misalkan nilai yang tidak diketahui adalah banyaknya "
    "siswa di kelas. Jika kita mengalikan kedua ruas persamaan dengan tiga, kita mendapatkan "
    "bentuk yang lebih sederhana. Oleh karena itu, jawabannya adalah jumlah dari suku-suku "
    "yang tersisa. Kita dapat memeriksa penyelesaian kita dengan mensubstitusikan nilai "
    "tersebut ke dalam persamaan awal. Peluang bahwa kartu yang dipilih secara acak berwarna "
    "merah sama dengan setengah. Karena segitiga tersebut siku-siku, kita menggunakan teorema "
    "Pythagoras untuk menghitung panjang sisi miring. Luas lingkaran adalah pi dikali kuadrat "
    "jari-jari. Ada berapa cara untuk menyusun huruf-huruf dari kata tersebut? Kita menghitung "
    "semua kemungkinan lalu membaginya dengan banyaknya susunan yang berulang. Ini berarti "
    "bahwa hasil akhirnya harus berupa bilangan bulat yang lebih besar dari nol. Akhirnya, kita "
    "sederhanakan pecahan itu dan menuliskan jawabannya di dalam kotak. Dia membeli tiga buku "
    "tulis dan dua pulpen untuk adiknya, dan dia membayar sisanya dengan uangnya sendiri. "
    "Berapakah bilangan bulat positif terkecil yang memenuhi semua syarat yang diberikan? "
    "Fungsi tersebut naik pada selang itu, sehingga nilai maksimumnya terjadi di ujung kanan. "
    "Setiap bilangan tersebut habis dibagi empat, yang memberi kita cara lain untuk memeriksa "
    "hasilnya. Penting untuk diingat bahwa urutan tidak berpengaruh di sini. Ada lebih banyak "
    "bola merah daripada bola biru di dalam kantong, dan semuanya berukuran sama. Saya pikir "
    "kita harus mempertimbangkan setiap kasus dengan hati-hati sebelum membuat kesimpulan "
    "tentang soal ini. Langkah pertama: mari kita hitung biayanya. Kemudian kita jumlahkan "
    "semuanya dan mendapatkan nilai yang benar. Tunggu, saya membuat kesalahan, jadi mari kita "
    "periksa lagi perhitungannya. Perhatikan bahwa jawabannya akan berbeda dengan rumus yang "
    "lain. Dengan demikian, kita sudah menemukan apa yang ditanyakan."
    " Satu, dua, tiga, empat, lima, enam, tujuh, delapan, sembilan dan sepuluh adalah "
    "bilangan. Hasil perkalian enam dengan tujuh adalah empat puluh dua. Untuk menjumlahkan, "
    "mengurangi, mengalikan atau membagi kita menggunakan operasi yang benar. Kucing makan "
    "ikan setiap hari di dapur. Anjing berlari cepat di jalan dan menggonggong keras. Pertama"
    " kita menghitung nilainya, lalu kita memeriksa jawabannya, dan akhirnya kita menulis "
    "hasilnya. Jawaban yang benar adalah bilangan yang kita cari.";

constexpr std::string_view kSw =
    "Ili kutatua tatizo hili, kwanza tunahitaji kupata jumla ya idadi ya maembe. Mkulima ana "
    "vikapu kumi na viwili na kila kikapu kina maembe saba, kwa hivyo jumla ni zao la namba "
    "hizi mbili. Kisha tunatoa maembe yaliyouzwa sokoni siku ya Jumatatu na Jumanne. Tuseme "
    "thamani isiyojulikana ni idadi ya wanafunzi darasani. Tukizidisha pande zote mbili za "
    "mlinganyo kwa tatu, tunapata usemi rahisi zaidi. Kwa hiyo, jibu ni jumla ya vipengele "
    "vilivyobaki. Tunaweza kuhakiki suluhisho letu kwa kuweka thamani hiyo katika mlinganyo wa "
    "awali. Uwezekano kwamba kadi iliyochaguliwa bila mpangilio ni nyekundu ni sawa na nusu. "
    "Kwa kuwa pembetatu hiyo ina pembe mraba, tunatumia nadharia ya Pythagoras kuhesabu urefu "
    "wa upande mrefu. Eneo la duara ni pi mara mraba wa nusu kipenyo. Kuna njia ngapi za "
    "kupanga herufi za neno hilo? Tunahesabu uwezekano wote na kugawanya kwa idadi ya "
    "mipangilio inayojirudia. Hii inamaanisha kwamba matokeo ya mwisho lazima yawe namba kamili "
    "kubwa kuliko sifuri. Mwishowe, tunarahisisha sehemu hiyo na kuandika jibu ndani ya "
    "kisanduku. Yeye alinunua madaftari matatu na kalamu mbili kwa ajili ya kaka yake, na "
    "alilipa kiasi kilichobaki kwa pesa zake mwenyewe. Je, ni namba kamili chanya ndogo zaidi "
    "ipi inayotimiza masharti yote yaliyotolewa? Kazi hiyo inaongezeka katika kipindi hicho, "
    "kwa hivyo thamani yake kubwa zaidi inatokea mwisho wa kulia. Kila moja ya namba hizo "
    "inagawanyika kwa nne, jambo ambalo linatupa njia nyingine ya kuhakiki matokeo. Ni muhimu "
    "kukumbuka kwamba mpangilio hauna umuhimu hapa. Kuna mipira mingi nyekundu kuliko mipira "
    "ya bluu ndani ya mfuko, na yote ina ukubwa sawa. Nadhani tunapaswa kufikiria kila hali "
    "kwa makini kabla ya kufikia hitimisho kuhusu tatizo hili. Hatua ya kwanza: tuhesabu "
    "gharama. Kisha tunajumlisha yote na kupata thamani sahihi. Subiri, nimefanya kosa, kwa "
    "hiyo tuangalie hesabu tena. Angalia kwamba jibu lingekuwa tofauti kwa kanuni nyingine. "
    "Kwa hivyo tumepata kile ambacho swali liliuliza."
    " Moja, mbili, tatu, nne, tano, sita, saba, nane, tisa na kumi ni namba. Matokeo ya "
    "kuzidisha sita kwa saba ni arobaini na mbili. Ili kujumlisha, kutoa, kuzidisha au "
    "kugawanya tunatumia operesheni sahihi. Paka anakula samaki kila siku jikoni. Mbwa "
    "anakimbia haraka barabarani na kubweka kwa sauti. Kwanza tunahesabu thamani, kisha "
    "tunaangalia jibu, na mwishowe tunaandika matokeo. Jibu sahihi ni namba tunayoitafuta.";

constexpr std::string_view kVi =
    "Để giải bài toán này, trước tiên chúng ta cần tìm tổng số quả táo. Người nông dân có "
    "mười hai cái giỏ và mỗi giỏ chứa bảy quả táo, vì vậy tổng số là tích của hai số này. "
    "Tiếp theo, chúng ta trừ đi số táo đã được bán ở chợ vào thứ Hai và thứ Ba. Gọi giá trị "
    "chưa biết là số học sinh trong lớp. Nếu nhân cả hai vế của phương trình với ba, chúng ta "
    "được một biểu thức đơn giản hơn. Do đó, đáp án là tổng của các số hạng còn lại. Chúng ta "
    "có thể kiểm tra lời giải bằng cách thay giá trị đó vào phương trình ban đầu. Xác suất để "
    "một lá bài được chọn ngẫu nhiên có màu đỏ bằng một nửa. Vì tam giác này là tam giác "
    "vuông, chúng ta áp dụng định lý Pythagoras để tính độ dài cạnh huyền. Diện tích hình tròn "
    "bằng pi nhân với bình phương bán kính. Có bao nhiêu cách sắp xếp các chữ cái của từ này? "
    "Chúng ta đếm các khả năng rồi chia cho số cách sắp xếp lặp lại. Điều này có nghĩa là kết "
    "quả cuối cùng phải là một số nguyên lớn hơn không. Cuối cùng, chúng ta rút gọn phân số và "
    "viết đáp án vào trong hộp. Cô ấy đã mua ba quyển vở và hai cây bút cho em trai, và cậu ấy "
    "trả phần còn lại bằng tiền của mình. Số nguyên dương nhỏ nhất thỏa mãn tất cả các điều "
    "kiện đã cho là bao nhiêu? Hàm số đồng biến trên khoảng đó, nên giá trị lớn nhất đạt được "
    "tại đầu mút bên phải. Mỗi số đều chia hết cho bốn, điều này cho chúng ta một cách khác để "
    "kiểm tra kết quả. Điều quan trọng cần nhớ là thứ tự không quan trọng ở đây. Trong túi có "
    "nhiều quả bóng đỏ hơn quả bóng xanh, và tất cả đều có cùng kích thước. Tôi nghĩ chúng ta "
    "nên xem xét kỹ từng trường hợp trước khi đưa ra kết luận về bài toán. Bước một: hãy tính "
    "chi phí. Sau đó chúng ta cộng tất cả lại và được giá trị đúng. Khoan đã, tôi đã mắc lỗi, "
    "vậy hãy kiểm tra lại phép tính. Lưu ý rằng đáp án sẽ khác nếu dùng công thức kia. Như "
    "vậy, chúng ta đã tìm được điều mà câu hỏi yêu cầu."
    " Một, hai, ba, bốn, năm, sáu, bảy, tám, chín và mười là các số. Kết quả của phép nhân "
    "sáu với bảy là bốn mươi hai. Để cộng, trừ, nhân hoặc chia chúng ta dùng phép tính đúng. "
    "Con mèo ăn cá mỗi ngày trong bếp. Con chó chạy nhanh trên đường và sủa to. Đầu tiên "
    "chúng ta tính giá trị, sau đó kiểm tra đáp án, và cuối cùng viết kết quả. Đáp án đúng là"
    " số mà chúng ta đang tìm.";

constexpr std::string_view kTr =
    "Bu problemi çözmek için önce toplam elma sayısını bulmamız gerekiyor. Çiftçinin on iki "
    "sepeti var ve her sepette yedi elma bulunuyor, bu yüzden toplam bu iki sayının "
    "çarpımıdır. Daha sonra pazartesi ve salı günü pazarda satılan elmaları çıkarıyoruz. "
    "Bilinmeyen değeri sınıftaki öğrenci sayısı olarak tanımlayalım. Denklemin her iki "
    "tarafını üç ile çarparsak daha basit bir ifade elde ederiz. Bu nedenle cevap kalan "
    "terimlerin toplamıdır. Çözümümüzü değeri orijinal denklemde yerine koyarak kontrol "
    "edebiliriz. Rastgele seçilen bir kartın kırmızı olma olasılığı yarıya eşittir. Üçgen dik "
    "üçgen olduğu için hipotenüsün uzunluğunu hesaplamak amacıyla Pisagor teoremini "
    "uyguluyoruz. Dairenin alanı pi çarpı yarıçapın karesidir. Kelimenin harflerini kaç farklı "
    "şekilde sıralayabiliriz? Olasılıkları sayıyoruz ve tekrarlanan dizilişlerin sayısına "
    "bölüyoruz. Bu, nihai sonucun sıfırdan büyük bir tam sayı olması gerektiği anlamına gelir. "
    "Son olarak kesri sadeleştiriyoruz ve cevabı kutunun içine yazıyoruz. Kardeşi için üç "
    "defter ve iki kalem satın aldı, o da kalanını kendi parasıyla ödedi. Verilen tüm koşulları "
    "sağlayan en küçük pozitif tam sayı nedir? Fonksiyon bu aralıkta artandır, dolayısıyla "
    "maksimum değeri sağ uç noktada gerçekleşir. Sayıların her biri dörde bölünebilir, bu da "
    "bize sonucu doğrulamak için başka bir yol verir. Burada sıranın önemli olmadığını "
    "hatırlamak önemlidir. Torbada mavi toplardan daha fazla kırmızı top var ve hepsi aynı "
    "büyüklükte. Bence sonuca varmadan önce her durumu dikkatlice incelemeliyiz. Birinci adım: "
    "maliyeti hesaplayalım. Sonra hepsini toplarız ve doğru değeri buluruz. Bekle, bir hata "
    "yaptım, o yüzden hesabı tekrar kontrol edelim. Diğer formülle cevabın farklı olacağına "
    "dikkat edin. Böylece sorunun istediği şeyi bulmuş olduk."
    " Bir, iki, üç, dört, beş, altı, yedi, sekiz, dokuz ve on sayılardır. Altı ile yedinin "
    "çarpımının sonucu kırk ikidir. Toplamak, çıkarmak, çarpmak veya bölmek için doğru işlemi"
    " kullanırız. Kedi her gün mutfakta balık yer. Köpek sokakta hızlı koşar ve yüksek sesle "
    "havlar. Önce değeri hesaplarız, sonra cevabı kontrol ederiz ve son olarak sonucu "
    "yazarız. Doğru cevap aradığımız sayıdır.";

constexpr std::string_view kYo =
    "Láti yanjú ìṣòro yìí, a kọ́kọ́ nílò láti wá àpapọ̀ iye àwọn èso ápù. Àgbẹ̀ náà ní agbọ̀n "
    "méjìlá, agbọ̀n kọ̀ọ̀kan sì ní èso méje nínú, nítorí náà àpapọ̀ rẹ̀ ni ìsọdipúpọ̀ àwọn "
    "nọ́mbà méjèèjì yìí. Lẹ́yìn náà, a yọ àwọn èso tí wọ́n tà ní ọjà ní ọjọ́ Ajé àti ọjọ́ "
    "Ìṣẹ́gun kúrò. Jẹ́ kí a pe iye tí a kò mọ̀ ní iye àwọn akẹ́kọ̀ọ́ nínú kílásì. Tí a bá sọ "
    "ẹ̀gbẹ́ méjèèjì ìdọ́gba náà di púpọ̀ pẹ̀lú mẹ́ta, a máa rí ọ̀rọ̀ tí ó rọrùn jù. Nítorí "
    "náà, ìdáhùn náà ni àpapọ̀ àwọn ìyókù. A lè ṣàyẹ̀wò ojútùú wa nípa fífi iye náà sínú "
    "ìdọ́gba àkọ́kọ́. Àǹfààní pé káàdì tí a yàn láìròtẹ́lẹ̀ jẹ́ pupa dọ́gba pẹ̀lú ìdajì. "
    "Nítorí pé onígun mẹ́ta náà ní igun ọ̀tún, a lo òfin Pythagoras láti ṣírò gígùn ẹ̀gbẹ́ tí "
    "ó gùn jùlọ. Ààyè àyíká náà jẹ́ pi lọ́nà ìlọ́po méjì ti ìdajì ìbú rẹ̀. Ọ̀nà mélòó ni a "
    "lè gbà to àwọn lẹ́tà ọ̀rọ̀ náà? A ka gbogbo àwọn àǹfààní, a sì pín in pẹ̀lú iye àwọn ètò "
    "tí ó tún ara wọn ṣe. Èyí túmọ̀ sí pé èsì ìkẹyìn gbọ́dọ̀ jẹ́ nọ́mbà odidi tí ó tóbi ju "
    "òdo lọ. Níkẹyìn, a ṣe ìrọ̀rùn ìdá náà, a sì kọ ìdáhùn sínú àpótí. Ó ra ìwé mẹ́ta àti "
    "kálámù méjì fún àbúrò rẹ̀, òun náà sì san ìyókù pẹ̀lú owó ara rẹ̀. Kí ni nọ́mbà odidi tí "
    "ó kéré jùlọ tí ó bá gbogbo àwọn ìlànà tí a fún mu? Ó ṣe pàtàkì láti rántí pé ètò kò ṣe "
    "pàtàkì níbí. Àwọn bọ́ọ̀lù pupa pọ̀ ju àwọn bọ́ọ̀lù búlúù lọ nínú àpò náà, gbogbo wọn sì "
    "tóbi bákan náà. Mo rò pé ó yẹ kí a ṣàyẹ̀wò ọ̀rọ̀ kọ̀ọ̀kan dáadáa kí a tó parí èrò lórí "
    "ìṣòro yìí. Ìgbésẹ̀ àkọ́kọ́: jẹ́ ká ṣírò iye owó náà. Lẹ́yìn náà a ṣe àròpọ̀ gbogbo rẹ̀, a "
    "sì rí iye tí ó tọ́. Dúró, mo ṣe àṣìṣe, nítorí náà jẹ́ ká tún ìṣírò náà wò."
    " Ọ̀kan, èjì, ẹ̀ta, ẹ̀rin, àrún, ẹ̀fà, èje, ẹ̀jọ, ẹ̀sán àti ẹ̀wá jẹ́ nọ́mbà. Èsì "
    "ìsọdipúpọ̀ ẹ̀fà àti èje jẹ́ méjìlélógójì. Láti ṣe àròpọ̀, àyọkúrò, ìsọdipúpọ̀ tàbí "
    "pínpín a máa ń lo iṣẹ́ tó tọ́. Ológbò ń jẹ ẹja lójoojúmọ́ nínú ilé ìdáná. Ajá ń sáré "
    "kíákíá ní ojú ọ̀nà ó sì ń gbó sókè. Àkọ́kọ́ a ṣírò iye náà, lẹ́yìn náà a ṣàyẹ̀wò ìdáhùn,"
    " níkẹyìn a kọ èsì náà. Ìdáhùn tó tọ́ ni nọ́mbà tí à ń wá.";

constexpr std::array<LatinCorpus, 11> kCorpora = {{
    {"en", kEn},
    {"es", kEs},
    {"fr", kFr},
    {"de", kDe},
    {"pt", kPt},
    {"it", kIt},
    {"id", kId},
    {"sw", kSw},
    {"vi", kVi},
    {"tr", kTr},
    {"yo", kYo},
}};

}  // namespace

std::span<const LatinCorpus> latin_corpora() { return kCorpora; }

}  // namespace tourney::detail
