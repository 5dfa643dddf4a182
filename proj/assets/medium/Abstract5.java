abstract class Abstract5 extends Abstract4 {
}
