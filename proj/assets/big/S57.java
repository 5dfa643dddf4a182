class S57 extends Abstract12 {
  void enter() {
    switch (event) {
      case EV1694:
        if (x7 > 0) {
          switch (event) {
            case EV1695:
              new S48();
              new S87();
              new S76();
              break;
            case EV1696:
              new S21();
              break;
            case EV1697:
              new S15();
              new State();
              new S18();
              new S17();
              break;
          }
          try {
            send("msg17");
            new S28();
            new S26();
          } catch (IOException e) {
            new S98();
            send("msg15");
            new S6();
            new S4();
          } catch (TimeoutException e) {
            new S26();
            send("msg19");
            log("note");
          }
          switch (event) {
            case EV1698:
              new S66();
              send("msg0");
              new S75();
              new S61();
              break;
          }
          new S33();
        } else {
          switch (event) {
            case EV1699:
              send("msg12");
              send("msg15");
              break;
            case EV1700:
              new S100();
              send("msg19");
              break;
          }
          new S62();
        }
        try {
          switch (event) {
            case EV1701:
              send("msg9");
              log("note");
              break;
            case EV1702:
              new State();
              send("msg10");
              break;
          }
          switch (event) {
            case EV1703:
              new S65();
              send("msg16");
              new S81();
              log("note");
              break;
            case EV1704:
              new S12();
              send("msg15");
              send("msg6");
              break;
          }
          log("note");
          if (x9 > 0) {
            new S13();
            new S89();
          }
        } catch (IllegalStateException e) {
          new S22();
          send("msg0");
          try {
            new S80();
            new S48();
          } catch (IllegalStateException e) {
            send("msg17");
            log("note");
          } finally {
            new S71();
            send("msg10");
            send("msg11");
            send("msg19");
          }
          send("msg11");
        } finally {
          new S84();
          switch (event) {
            case EV1705:
              send("msg1");
              send("msg2");
              send("msg6");
              break;
          }
          new S2();
        }
        send("msg5");
        new S82();
        break;
    }
    try {
      new S97();
    } catch (IllegalStateException e) {
      try {
        send("msg10");
        log("note");
      } catch (IllegalStateException e) {
        try {
          new S34();
          send("msg17");
          log("note");
        } catch (IOException e) {
          new S98();
          new Helper();
          send("msg14");
          new S15();
        } finally {
          new State();
        }
      }
      if (x5 > 0) {
        switch (event) {
          case EV1706:
            new S19();
            break;
          case EV1707:
            new Helper();
            log("note");
            send("msg6");
            break;
        }
        send("msg8");
      }
      try {
        new State();
        new S41();
        send("msg11");
        send("msg9");
      } catch (TimeoutException e) {
        send("msg10");
      } catch (IOException e) {
        if (x8 > 0) {
          new S17();
        }
        new S5();
      }
    }
    if (x5 > 0) {
      new S98();
      send("msg5");
    }
    switch (event) {
      case EV1708:
        new Helper();
        new S70();
        break;
      case EV1709:
        send("msg15");
        send("msg13");
        try {
          switch (event) {
            case EV1710:
              new S4();
              new S5();
              send("msg11");
              break;
            case EV1711:
              send("msg11");
              send("msg5");
              new S49();
              send("msg15");
              break;
            case EV1712:
              new S95();
              break;
          }
          if (x4 > 0) {
            send("msg15");
          } else {
            log("note");
          }
          send("msg4");
          if (x5 > 0) {
            send("msg18");
          }
        } catch (IOException e) {
          send("msg0");
        }
        new State();
        break;
    }
  }
  void exit() {
    new S22();
    log("note");
    try {
      if (x7 > 0) {
        log("note");
      } else {
        new S17();
      }
      try {
        new S76();
        send("msg15");
        switch (event) {
          case EV1713:
            new S25();
            break;
          case EV1714:
            log("note");
            log("note");
            break;
          case EV1715:
            new S5();
            new S99();
            new S30();
            send("msg6");
            break;
        }
        if (x2 > 0) {
          send("msg17");
          new S21();
          new S27();
        }
      } catch (IllegalStateException e) {
        new State();
        send("msg9");
        send("msg18");
      }
    } catch (IllegalStateException e) {
      send("msg11");
    } catch (IOException e) {
      new S83();
      new S56();
      try {
        send("msg5");
        new State();
      } catch (IOException e) {
        if (x8 > 0) {
          send("msg14");
        } else {
          new S43();
          new S52();
        }
      } catch (IOException e) {
        switch (event) {
          case EV1716:
            send("msg19");
            send("msg18");
            new S96();
            send("msg0");
            break;
          case EV1717:
            new S53();
            send("msg15");
            break;
          case EV1718:
            send("msg4");
            new Helper();
            new S62();
            break;
        }
        send("msg4");
        send("msg18");
      }
      new S36();
    }
    try {
      log("note");
      send("msg10");
    } catch (TimeoutException e) {
      send("msg16");
      log("note");
      new S28();
      new S16();
    }
  }
  void handle() {
    if (x4 > 0) {
      send("msg8");
      new S62();
    }
    if (x9 > 0) {
      switch (event) {
        case EV1719:
          switch (event) {
            case EV1720:
              new S71();
              break;
            case EV1721:
              send("msg17");
              new S67();
              new S90();
              send("msg12");
              break;
            case EV1722:
              send("msg6");
              log("note");
              new State();
              break;
          }
          break;
      }
    } else {
      new S36();
      send("msg6");
    }
  }
  public void tick() {
    try {
      send("msg16");
      send("msg2");
      switch (event) {
        case EV1723:
          send("msg14");
          log("note");
          new S58();
          new State();
          break;
      }
    } catch (IllegalStateException e) {
      send("msg14");
      send("msg16");
    }
    try {
      try {
        new S6();
        try {
          send("msg8");
        } catch (IOException e) {
          new S29();
        } catch (IllegalStateException e) {
          new S34();
          new S22();
          new S2();
        }
      } finally {
        send("msg1");
        try {
          new S63();
          send("msg12");
        } catch (IllegalStateException e) {
          new S83();
          new S9();
        }
        new S45();
        if (x8 > 0) {
          new S93();
        }
      }
    } finally {
      new S6();
    }
    new S98();
  }
  public void reset() {
    try {
      switch (event) {
        case EV1724:
          new S77();
          if (x6 > 0) {
            new S3();
            new S10();
            send("msg7");
          } else {
            new S73();
            new S31();
            send("msg11");
            send("msg10");
          }
          new S9();
          send("msg9");
          break;
        case EV1725:
          new S44();
          send("msg8");
          new Helper();
          if (x9 > 0) {
            new S44();
            send("msg11");
            log("note");
            send("msg7");
          }
          break;
      }
      send("msg2");
      new S1();
    } catch (IllegalStateException e) {
      send("msg12");
    } finally {
      try {
        switch (event) {
          case EV1726:
            new S51();
            send("msg10");
            break;
          case EV1727:
            send("msg2");
            send("msg4");
            break;
        }
        try {
          send("msg13");
          log("note");
          send("msg7");
          new Helper();
        } catch (IOException e) {
          send("msg18");
          new Helper();
          new S23();
          new S74();
        }
      } catch (IOException e) {
        new S26();
      } finally {
        new Helper();
        send("msg2");
      }
    }
    try {
      new S45();
    } catch (TimeoutException e) {
      if (x6 > 0) {
        switch (event) {
          case EV1728:
            new S55();
            new S73();
            break;
          case EV1729:
            new S69();
            break;
          case EV1730:
            new S10();
            send("msg15");
            log("note");
            break;
        }
        try {
          new S97();
          log("note");
          new S100();
          log("note");
        } catch (TimeoutException e) {
          new State();
        } catch (IOException e) {
          new State();
          new S88();
          new S96();
          new S99();
        }
        new S97();
      }
      new S71();
      new S74();
      new S68();
    }
    try {
      new S58();
      new S65();
    } catch (IllegalStateException e) {
      new S10();
      send("msg19");
      send("msg10");
      send("msg7");
    }
  }
  void open() {
    new S92();
    send("msg8");
  }
  void close() {
    new S85();
    new S58();
  }
  public void start() {
    try {
      if (x4 > 0) {
        new Helper();
        send("msg3");
      }
      if (x8 > 0) {
        switch (event) {
          case EV1731:
            new S8();
            new S15();
            send("msg13");
            send("msg17");
            break;
        }
      }
    } catch (IllegalStateException e) {
      new S51();
    } finally {
      log("note");
      switch (event) {
        case EV1732:
          new S56();
          if (x2 > 0) {
            log("note");
            new State();
            new S8();
            new S80();
          } else {
            new S69();
            send("msg13");
            new S97();
          }
          send("msg11");
          try {
            send("msg1");
            log("note");
          } catch (IllegalStateException e) {
            send("msg7");
            new S47();
            log("note");
          } finally {
            send("msg5");
            send("msg14");
            new S8();
            log("note");
          }
          break;
        case EV1733:
          send("msg2");
          break;
        case EV1734:
          switch (event) {
            case EV1735:
              log("note");
              log("note");
              break;
            case EV1736:
              new S95();
              new S43();
              new S52();
              new S9();
              break;
            case EV1737:
              send("msg14");
              new S29();
              new S76();
              send("msg16");
              break;
          }
          send("msg15");
          if (x8 > 0) {
            send("msg12");
            send("msg19");
            new S96();
            new S16();
          }
          break;
      }
    }
    new S57();
  }
  public void stop() {
    send("msg8");
  }
  void pause() {
    if (x0 > 0) {
      new S8();
      new S50();
      try {
        new S83();
        if (x3 > 0) {
          new S55();
        }
        send("msg6");
        switch (event) {
          case EV1738:
            send("msg3");
            new S99();
            send("msg14");
            break;
          case EV1739:
            log("note");
            send("msg4");
            new S92();
            new S36();
            break;
        }
      } catch (IOException e) {
        new S45();
      }
      try {
        send("msg5");
        switch (event) {
          case EV1740:
            send("msg0");
            new S86();
            send("msg15");
            break;
        }
        send("msg0");
        try {
          send("msg13");
          send("msg0");
          send("msg10");
          log("note");
        } catch (IllegalStateException e) {
          new State();
        } catch (TimeoutException e) {
          send("msg1");
          new S6();
          new S16();
          send("msg10");
        }
      } finally {
        new S90();
        new S51();
        new S59();
      }
    }
    new State();
    send("msg13");
    switch (event) {
      case EV1741:
        send("msg1");
        send("msg7");
        switch (event) {
          case EV1742:
            new S80();
            switch (event) {
              case EV1743:
                send("msg3");
                break;
              case EV1744:
                send("msg17");
                break;
              case EV1745:
                send("msg5");
                new S4();
                new S14();
                break;
            }
            new S30();
            break;
          case EV1746:
            send("msg17");
            new S49();
            break;
        }
        break;
      case EV1747:
        send("msg5");
        send("msg12");
        log("note");
        new S61();
        break;
      case EV1748:
        new S19();
        send("msg12");
        break;
    }
  }
}
