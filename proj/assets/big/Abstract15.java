abstract class Abstract15 extends Abstract9 {
}
